"""Free non-commutative algebra over x, x^-1, y with rational coefficients.

Words are stored run-length encoded as tuples of ``(letter, exponent)``
pairs with ``letter`` in ``{"x", "y"}``.  An x-run may carry a negative
exponent (powers of x^-1); y-runs are always positive.  Adjacent runs
always differ in letter, so merging neighbouring x-runs *is* the
cancellation x x^-1 = x^-1 x = 1 and every stored word is reduced.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

__all__ = [
    "sign",
    "X",
    "XINV",
    "Y",
    "Word",
    "word_from_letters",
    "word_letters",
    "reduce_letters",
    "concat",
    "render_word",
    "WordPoly",
    "Matrix2",
    "mul",
    "fib_word",
    "fib_word_left",
    "dual_substitution",
    "C",
    "C_INV",
    "C_power",
    "C_power_pattern",
    "nc_det",
    "check_sum_formula",
    "check_euler_cassini",
    "tilings",
    "tilings_oracle",
]

def sign(n: int) -> int:
    """(-1)^n as an int, for any integer n."""
    return -1 if n % 2 else 1


X, XINV, Y = "x", "X", "y"  # letter names for the unreduced letter form

Word = tuple  # tuple[tuple[str, int], ...]

_EMPTY: Word = ()


def _push(runs: list, letter: str, exp: int) -> None:
    """Append ``letter^exp`` to a run list, merging and cancelling in place."""
    if exp == 0:
        return
    if runs and runs[-1][0] == letter:
        merged = runs[-1][1] + exp
        runs.pop()
        if merged:
            runs.append((letter, merged))
    else:
        runs.append((letter, exp))


def concat(u: Word, v: Word) -> Word:
    """Reduced product of two reduced words."""
    if not u:
        return v
    if not v:
        return u
    runs = list(u)
    for letter, exp in v:
        _push(runs, letter, exp)
    return tuple(runs)


def word_from_letters(letters: Iterable[str]) -> Word:
    """Reduced word from a sequence of single letters ``x``, ``X`` (x^-1), ``y``."""
    runs: list = []
    for ch in letters:
        if ch == X:
            _push(runs, "x", 1)
        elif ch == XINV:
            _push(runs, "x", -1)
        elif ch == Y:
            _push(runs, "y", 1)
        else:
            raise ValueError(f"unknown letter {ch!r}")
    return tuple(runs)


def word_letters(word: Word) -> tuple:
    """Expand a run-length word into single letters."""
    out = []
    for letter, exp in word:
        if letter == "y":
            out.extend(Y * exp)
        else:
            out.extend((X if exp > 0 else XINV) * abs(exp))
    return tuple(out)


def reduce_letters(letters: Iterable[str], strategy: str = "leftmost") -> tuple:
    """Cancel adjacent x x^-1 / x^-1 x pairs one at a time.

    ``strategy`` picks which redex is contracted first (``"leftmost"`` or
    ``"rightmost"``).  Used to test that reduction is confluent.
    """
    seq = list(letters)
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    while True:
        positions = [i for i in range(len(seq) - 1) if {seq[i], seq[i + 1]} == {X, XINV}]
        if not positions:
            return tuple(seq)
        i = positions[0] if strategy == "leftmost" else positions[-1]
        del seq[i : i + 2]


def render_word(word: Word) -> str:
    if not word:
        return "1"
    out = []
    for letter, exp in word:
        out.append(letter if exp == 1 else f"{letter}^{exp}")
    return "".join(out)


def _word_sort_key(word: Word):
    ycount = sum(exp for letter, exp in word if letter == "y")
    rank = {X: 0, XINV: 1, Y: 2}
    return ycount, tuple(rank[ch] for ch in word_letters(word))


def _coeff_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<x>x(?:\^-?\d+)?)|(?P<y>y(?:\^\d+)?)|(?P<op>[+-]))")


class WordPoly:
    """Finite rational combination of reduced words."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, object] | None = None):
        clean: dict = {}
        for word, coeff in (terms or {}).items():
            clean[word] = clean.get(word, 0) + Fraction(coeff)
        self._terms = {w: c for w, c in clean.items() if c}
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c=1) -> "WordPoly":
        return cls({_EMPTY: c})

    @classmethod
    def word(cls, word: Word, c=1) -> "WordPoly":
        return cls({word: c})

    @classmethod
    def letters(cls, letters: str) -> "WordPoly":
        return cls({word_from_letters(letters): 1})

    # container protocol
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, word: Word) -> Fraction:
        return self._terms.get(word, Fraction(0))

    # arithmetic
    def __add__(self, other: "WordPoly") -> "WordPoly":
        other = _as_wordpoly(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return WordPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "WordPoly":
        return WordPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "WordPoly") -> "WordPoly":
        return self + (-_as_wordpoly(other))

    def __rsub__(self, other) -> "WordPoly":
        return _as_wordpoly(other) - self

    def __mul__(self, other) -> "WordPoly":
        if isinstance(other, (int, Fraction)):
            return WordPoly({w: c * other for w, c in self._terms.items()})
        return mul(self, other)

    def __rmul__(self, other) -> "WordPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return mul(_as_wordpoly(other), self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WordPoly.const(other)
        if not isinstance(other, WordPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_words(self, image) -> "WordPoly":
        """Apply an algebra endomorphism given by ``image(letter, exp) -> WordPoly``."""
        total = WordPoly()
        for word, coeff in self._terms.items():
            term = WordPoly.const(coeff)
            for letter, exp in word:
                term = term * image(letter, exp)
            total = total + term
        return total

    # notation
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for word, c in sorted(self._terms.items(), key=lambda wc: _word_sort_key(wc[0])):
            mag = abs(c)
            if not word:
                body = _coeff_text(mag)
            elif mag == 1:
                body = render_word(word)
            else:
                body = f"{_coeff_text(mag)} {render_word(word)}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    def __repr__(self):
        return f"WordPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "WordPoly":
        """Parse the notation produced by ``str``, e.g. ``- x^-1yx^-1 + 2 y^2``."""
        pos = 0
        tokens = []
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse word polynomial at {text[pos:]!r}")
            tokens.append((m.lastgroup, m.group(m.lastgroup)))
            pos = m.end()
        if not tokens:
            raise ValueError("empty word polynomial")
        if tokens == [("num", "0")]:
            return cls()
        total: dict = {}
        i = 0
        first = True
        while i < len(tokens):
            sign = 1
            if tokens[i][0] == "op":
                sign = -1 if tokens[i][1] == "-" else 1
                i += 1
            elif not first:
                raise ValueError("expected '+' or '-' between terms")
            first = False
            start = i
            coeff = Fraction(1)
            if i < len(tokens) and tokens[i][0] == "num":
                coeff = Fraction(tokens[i][1])
                i += 1
            runs: list = []
            while i < len(tokens) and tokens[i][0] in ("x", "y"):
                kind, tok = tokens[i]
                _push(runs, kind, int(tok.split("^")[1]) if "^" in tok else 1)
                i += 1
            if i == start:
                raise ValueError("expected a term after a sign")
            word = tuple(runs)
            total[word] = total.get(word, 0) + sign * coeff
        return cls(total)


def _as_wordpoly(value) -> WordPoly:
    if isinstance(value, WordPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return WordPoly.const(value)
    raise TypeError(f"cannot use {type(value).__name__} as a word polynomial")


def mul(u: WordPoly, v: WordPoly) -> WordPoly:
    """Bilinear product with inverse-pair reduction of each concatenation."""
    out: dict = {}
    for w1, c1 in u:
        for w2, c2 in v:
            w = concat(w1, w2)
            out[w] = out.get(w, 0) + c1 * c2
    return WordPoly(out)


ONE = WordPoly.const(1)
XP = WordPoly.word((("x", 1),))
XM = WordPoly.word((("x", -1),))
YP = WordPoly.word((("y", 1),))


@lru_cache(maxsize=None)
def fib_word(n: int) -> WordPoly:
    """Non-commutative Fibonacci polynomial F_n(x, y) for any integer n.

    F_0 = 1, F_1 = y, F_{n+2} = F_n x + F_{n+1} y; negative indices run the
    same recurrence backwards, F_n = (F_{n+2} - F_{n+1} y) x^-1.
    """
    if n == 0:
        return ONE
    if n == 1:
        return YP
    if n >= 2:
        return fib_word(n - 2) * XP + fib_word(n - 1) * YP
    return (fib_word(n + 2) - fib_word(n + 1) * YP) * XM


@lru_cache(maxsize=None)
def fib_word_left(n: int) -> WordPoly:
    """F_n built from the left-multiplying recurrence F_{n+2} = x F_n + y F_{n+1}."""
    if n == 0:
        return ONE
    if n == 1:
        return YP
    if n >= 2:
        return XP * fib_word_left(n - 2) + YP * fib_word_left(n - 1)
    return XM * (fib_word_left(n + 2) - YP * fib_word_left(n + 1))


def _dual_image(letter: str, exp: int) -> WordPoly:
    if letter == "x":
        return WordPoly.word((("x", -exp),))
    image = ONE
    for _ in range(exp):
        image = image * XM * YP
    return image


def dual_substitution(u: WordPoly) -> WordPoly:
    """Image under the endomorphism x -> x^-1, x^-1 -> x, y -> x^-1 y."""
    return u.map_words(_dual_image)


@dataclass(frozen=True)
class Matrix2:
    """2x2 matrix with WordPoly entries."""

    a11: WordPoly
    a12: WordPoly
    a21: WordPoly
    a22: WordPoly

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls(ONE, WordPoly(), WordPoly(), ONE)

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def entries(self) -> tuple:
        return (self.a11, self.a12, self.a21, self.a22)

    def __str__(self):
        return f"[[{self.a11}, {self.a12}], [{self.a21}, {self.a22}]]"


C = Matrix2(WordPoly(), ONE, XP, YP)
C_INV = Matrix2(-(XM * YP), XM, ONE, WordPoly())


@lru_cache(maxsize=None)
def C_power(n: int) -> Matrix2:
    """C(x, y)^n for any integer n, using the explicit inverse for n < 0."""
    if n == 0:
        return Matrix2.identity()
    if n > 0:
        return C_power(n - 1) @ C
    return C_power(n + 1) @ C_INV


def C_power_pattern(n: int) -> Matrix2:
    """The Fibonacci form [[F_{n-2} x, F_{n-1}], [F_{n-1} x, F_n]] of C^n."""
    return Matrix2(fib_word(n - 2) * XP, fib_word(n - 1), fib_word(n - 1) * XP, fib_word(n))


def nc_det(m: Matrix2) -> WordPoly:
    """Non-commutative determinant a11(x^-1, x, x^-1 y) a22 - a21(x^-1, x, x^-1 y) x a12."""
    return dual_substitution(m.a11) * m.a22 - dual_substitution(m.a21) * XP * m.a12


def check_sum_formula(m: int, n: int) -> bool:
    """F_{m+n} == F_{m-1} x F_{n-1} + F_m F_n, exactly."""
    return fib_word(m + n) == fib_word(m - 1) * XP * fib_word(n - 1) + fib_word(m) * fib_word(n)


def check_euler_cassini(n: int, k: int) -> bool:
    """(-1)^n F_k == F_{n-2}(x^-1, x^-1 y) x^-1 F_{n+k} - F_{n-1}(x^-1, x^-1 y) F_{n+k-1}."""
    lhs = fib_word(k) * sign(n)
    rhs = dual_substitution(fib_word(n - 2)) * XM * fib_word(n + k) - dual_substitution(
        fib_word(n - 1)
    ) * fib_word(n + k - 1)
    return lhs == rhs


def tilings(n: int) -> Iterator[tuple]:
    """All ordered tilings of a 1 x n board as tuples of tile lengths (1 or 2)."""
    if n < 0:
        raise ValueError(f"board length must be non-negative, got {n}")
    for squares in range(n % 2, n + 1, 2):
        dominoes = (n - squares) // 2
        for spots in itertools.combinations(range(squares + dominoes), dominoes):
            tiles = [1] * (squares + dominoes)
            for s in spots:
                tiles[s] = 2
            yield tuple(tiles)


def tilings_oracle(n: int) -> WordPoly:
    """Sum over tilings of the left-to-right word (domino -> x, square -> y)."""
    total: dict = {}
    for tiling in tilings(n):
        word = word_from_letters(X if t == 2 else Y for t in tiling)
        total[word] = total.get(word, 0) + 1
    return WordPoly(total)
