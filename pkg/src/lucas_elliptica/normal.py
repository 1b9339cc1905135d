"""Normal ordering in the weight-dependent algebra C_w[x, x^-1, y].

Defining relations (``X`` is x^-1)::

    x X = X x = 1
    y x = w(1,1) x y          X y = w(0,1) y X
    x w(s,t) = w(s+1,t) x     X w(s,t) = w(s-1,t) X     y w(s,t) = w(s,t+1) y

Every element has a unique normal form sum_{k,l} c_{k,l} x^k y^l with the
weight coefficient on the far left.  :func:`normal_order` reaches it by
peeling one letter at a time; :func:`mul_normal` uses the closed-form
interchange rule instead; the token rewriting functions apply single
relations and serve as the oracle for both.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence

from .weights import (
    WeightExpr,
    WeightEnv,
    big_weight_expr,
    dual_weight_map,
    evaluate,
    interchange_weight,
    parse_weight_sum,
    parse_weight_term,
    tokenize,
)
from .words import WordPoly

__all__ = [
    "NormalPoly",
    "normal_order",
    "mul_normal",
    "dual_normal",
    "word_tokens",
    "admissible_rewrites",
    "rewrite_at",
    "normal_order_tokens",
    "rewrite_to_normal",
]

Key = tuple  # (x exponent, y exponent)


class NormalPoly:
    """Normally ordered element sum c_{k,l} x^k y^l of C_w[x, x^-1, y]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, WeightExpr] | None = None):
        clean: dict = {}
        for (k, l), coeff in (terms or {}).items():
            if l < 0:
                raise ValueError(f"y is not invertible, got y-exponent {l}")
            if not isinstance(coeff, WeightExpr):
                coeff = WeightExpr.const(coeff)
            clean[(k, l)] = clean[(k, l)] + coeff if (k, l) in clean else coeff
        self._terms = {key: c for key, c in clean.items() if c}
        self._hash = None

    @classmethod
    def const(cls, c=1) -> "NormalPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, k: int, l: int, c=1) -> "NormalPoly":
        return cls({(k, l): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Key, WeightExpr]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, k: int, l: int) -> WeightExpr:
        return self._terms.get((k, l), WeightExpr())

    def __add__(self, other) -> "NormalPoly":
        other = _as_normal(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out[key] + c if key in out else c
        return NormalPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "NormalPoly":
        return NormalPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other) -> "NormalPoly":
        return self + (-_as_normal(other))

    def __rsub__(self, other) -> "NormalPoly":
        return _as_normal(other) - self

    def __mul__(self, other) -> "NormalPoly":
        if isinstance(other, (int, Fraction)):
            return NormalPoly({key: c * other for key, c in self._terms.items()})
        return mul_normal(self, _as_normal(other))

    def __rmul__(self, other) -> "NormalPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        if isinstance(other, WeightExpr):
            # a weight on the far left just multiplies every coefficient
            return NormalPoly({key: other * c for key, c in self._terms.items()})
        return mul_normal(_as_normal(other), self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NormalPoly.const(other)
        if not isinstance(other, NormalPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_coefficients(self, fn: Callable[[WeightExpr], WeightExpr]) -> "NormalPoly":
        return NormalPoly({key: fn(c) for key, c in self._terms.items()})

    def evaluate(self, env: WeightEnv) -> dict:
        """Numeric coefficients ``{(k, l): value}`` under a weight environment."""
        return {key: evaluate(c, env) for key, c in self._terms.items()}

    # notation
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (k, l), c in sorted(self._terms.items(), key=lambda kc: (kc[0][1], -kc[0][0])):
            mono = " ".join(
                piece
                for piece in (
                    "" if k == 0 else ("x" if k == 1 else f"x^{k}"),
                    "" if l == 0 else ("y" if l == 1 else f"y^{l}"),
                )
                if piece
            )
            negative = False
            if len(c) == 1:
                ((wmono, num),) = c
                negative = num < 0
                ctext = str(WeightExpr({wmono: abs(num)}))
            else:
                ctext = f"({c})"
            if not mono:
                body = ctext
            elif ctext == "1":
                body = mono
            else:
                body = f"{ctext} {mono}"
            parts.append(("- " if negative else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    def __repr__(self):
        return f"NormalPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "NormalPoly":
        """Parse notation like ``(1 + w(1,1)) x y - w(0,1)^-1 x^-1 y + y^3``."""
        tokens = tokenize(text)
        if tokens == [("num", Fraction(0))]:
            return cls()
        total: dict = {}
        pos = 0
        first = True
        while pos < len(tokens):
            sign = 1
            tok = tokens[pos]
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if tok[1] == "-" else 1
                pos += 1
            elif not first:
                raise ValueError(f"expected '+' or '-' in {text!r}")
            first = False
            start = pos
            coeff = WeightExpr.const(1)
            if pos < len(tokens) and tokens[pos] == ("op", "("):
                coeff, pos = parse_weight_sum(tokens, pos + 1)
                if pos >= len(tokens) or tokens[pos] != ("op", ")"):
                    raise ValueError(f"unbalanced parenthesis in {text!r}")
                pos += 1
            elif pos < len(tokens) and tokens[pos][0] in ("num", "w"):
                coeff, pos = parse_weight_term(tokens, pos)
            k = l = 0
            if pos < len(tokens) and tokens[pos][0] == "x":
                k = tokens[pos][1]
                pos += 1
            if pos < len(tokens) and tokens[pos][0] == "y":
                l = tokens[pos][1]
                pos += 1
            if pos == start:
                raise ValueError(f"expected a term in {text!r}")
            key = (k, l)
            piece = coeff * sign
            total[key] = total[key] + piece if key in total else piece
        return cls(total)


def _as_normal(value) -> NormalPoly:
    if isinstance(value, NormalPoly):
        return value
    if isinstance(value, (int, Fraction, WeightExpr)):
        return NormalPoly.const(value)
    raise TypeError(f"cannot use {type(value).__name__} as a normal polynomial")


def _times_x(coeff: WeightExpr, k: int, l: int, exp: int) -> tuple[WeightExpr, int]:
    """(c x^k y^l) x^exp, one x or x^-1 at a time."""
    for _ in range(abs(exp)):
        if exp > 0:
            # y^l x = W(1, l) x y^l, then the weight moves left past x^k
            coeff = coeff * big_weight_expr(1 + k, l)
            k += 1
        else:
            # y^l x^-1 = W(0, l)^-1 x^-1 y^l
            coeff = coeff * big_weight_expr(k, l).inverse()
            k -= 1
    return coeff, k


def normal_order(u: WordPoly) -> NormalPoly:
    """Normal form of a word polynomial, by structural recursion on each word."""
    out: dict = {}
    for word, c in u:
        coeff, k, l = WeightExpr.const(c), 0, 0
        for letter, exp in word:
            if letter == "y":
                l += exp
            else:
                coeff, k = _times_x(coeff, k, l, exp)
        key = (k, l)
        out[key] = out[key] + coeff if key in out else coeff
    return NormalPoly(out)


def mul_normal(u: NormalPoly, v: NormalPoly) -> NormalPoly:
    """Product of normal forms via the interchange rule y^l x^m = I(l, m) x^m y^l.

    (c x^k y^l)(c' x^m y^n) = c * c'[s+k, t+l] * I(l, m)[s+k] x^{k+m} y^{l+n}
    """
    out: dict = {}
    for (k, l), c in u:
        for (m, n), c2 in v:
            coeff = c * c2.shift(k, l) * interchange_weight(l, m).shift(k, 0)
            key = (k + m, l + n)
            out[key] = out[key] + coeff if key in out else coeff
    return NormalPoly(out)


def _dual_monomial(k: int, l: int) -> NormalPoly:
    """Normal form of x^-k (x^-1 y)^l."""
    word = WordPoly.word((("x", -k),)) if k else WordPoly.const(1)
    for _ in range(l):
        word = word * WordPoly.letters("Xy")
    return normal_order(word)


def dual_normal(u: NormalPoly) -> NormalPoly:
    """Apply the involution x -> x^-1, y -> x^-1 y, w(s,t) -> w(1-s-t,t)^-1.

    The image is returned in normal form with respect to the original weights.
    """
    total = NormalPoly()
    for (k, l), c in u:
        total = total + dual_weight_map(c) * _dual_monomial(k, l)
    return total


# --- single-step rewriting oracle -------------------------------------------
#
# A term is a tuple of tokens: "x", "X" (x^-1), "y", or ("w", s, t, e) for
# w(s,t)^e.  Scalar coefficients are carried separately by the caller.

Token = object


def word_tokens(word: tuple) -> tuple:
    """Token sequence of a run-length word."""
    out: list = []
    for letter, exp in word:
        if letter == "y":
            out.extend(["y"] * exp)
        else:
            out.extend(["x" if exp > 0 else "X"] * abs(exp))
    return tuple(out)


def _is_weight(tok) -> bool:
    return isinstance(tok, tuple)


def admissible_rewrites(tokens: Sequence[Token]) -> list[int]:
    """Positions i where a defining relation applies to tokens[i], tokens[i+1]."""
    spots = []
    for i in range(len(tokens) - 1):
        a, b = tokens[i], tokens[i + 1]
        if _is_weight(a):
            continue
        if (a, b) in (("x", "X"), ("X", "x")):
            spots.append(i)
        elif a == "y" and (b in ("x", "X") or _is_weight(b)):
            spots.append(i)
        elif a in ("x", "X") and _is_weight(b):
            spots.append(i)
    return spots


def rewrite_at(tokens: Sequence[Token], i: int) -> tuple:
    """Apply the unique relation whose left side starts at position i."""
    a, b = tokens[i], tokens[i + 1]
    head, tail = tuple(tokens[:i]), tuple(tokens[i + 2 :])
    if (a, b) in (("x", "X"), ("X", "x")):
        mid: tuple = ()
    elif a == "y" and b == "x":
        mid = (("w", 1, 1, 1), "x", "y")
    elif a == "y" and b == "X":
        # from X y = w(0,1) y X
        mid = (("w", 0, 1, -1), "X", "y")
    elif a == "y" and _is_weight(b):
        _, s, t, e = b
        mid = (("w", s, t + 1, e), "y")
    elif a == "x" and _is_weight(b):
        _, s, t, e = b
        mid = (("w", s + 1, t, e), "x")
    elif a == "X" and _is_weight(b):
        _, s, t, e = b
        mid = (("w", s - 1, t, e), "X")
    else:
        raise ValueError(f"no relation applies at position {i}")
    return head + mid + tail


def _read_normal(tokens: Sequence[Token], coeff) -> NormalPoly:
    """Read off an irreducible token sequence w... x^k y^l."""
    exps: dict = {}
    k = l = 0
    for tok in tokens:
        if _is_weight(tok):
            _, s, t, e = tok
            exps[(s, t)] = exps.get((s, t), 0) + e
        elif tok == "x":
            k += 1
        elif tok == "X":
            k -= 1
        else:
            l += 1
    return NormalPoly.monomial(k, l, WeightExpr.monomial(exps, coeff))


def normal_order_tokens(tokens: Sequence[Token], coeff=1) -> NormalPoly:
    """Normal form of a token sequence (weights may appear anywhere)."""
    c, k, l = WeightExpr.const(coeff), 0, 0
    for tok in tokens:
        if _is_weight(tok):
            _, s, t, e = tok
            c = c * WeightExpr.symbol(s + k, t + l, e)
        elif tok == "y":
            l += 1
        else:
            c, k = _times_x(c, k, l, 1 if tok == "x" else -1)
    return NormalPoly.monomial(k, l, c)


def rewrite_to_normal(tokens: Sequence[Token], coeff=1, rng: random.Random | None = None) -> NormalPoly:
    """Apply randomly chosen single relations until none applies."""
    rng = rng or random.Random(0)
    seq = tuple(tokens)
    while True:
        spots = admissible_rewrites(seq)
        if not spots:
            return _read_normal(seq, coeff)
        seq = rewrite_at(seq, rng.choice(spots))
