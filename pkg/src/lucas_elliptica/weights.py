"""Symbolic weights w(s, t) and evaluation environments.

A :class:`WeightExpr` is a Laurent polynomial with rational coefficients in
the invertible indeterminates ``w(s, t)`` (``s`` any integer, ``t >= 1``).
Monomials are canonical sorted tuples of ``((s, t), exponent)`` pairs, so
structural equality is algebraic equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Mapping

from .elliptic import EllipticParams, small_weight
from .errors import EnvDomainError
from .theta import DEFAULT_CONFIG, ThetaConfig

__all__ = [
    "WeightSymbol",
    "WeightExpr",
    "WeightEnv",
    "big_weight_expr",
    "interchange_weight",
    "dual_weight_map",
    "evaluate",
]


@dataclass(frozen=True, order=True)
class WeightSymbol:
    s: int
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"weight symbols need t >= 1, got w({self.s},{self.t})")

    def __str__(self):
        return f"w({self.s},{self.t})"


Monomial = tuple  # tuple[tuple[tuple[int, int], int], ...], sorted by (s, t)


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for st, e in m2:
        exps[st] = exps.get(st, 0) + e
    return tuple(sorted((st, e) for st, e in exps.items() if e))


def _mono_text(mono: Monomial) -> str:
    out = []
    for (s, t), e in mono:
        out.append(f"w({s},{t})" + ("" if e == 1 else f"^{e}"))
    return "".join(out)


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _term_text(mono: Monomial, mag: Fraction) -> str:
    if not mono:
        return _frac_text(mag)
    if mag == 1:
        return _mono_text(mono)
    return f"{_frac_text(mag)} {_mono_text(mono)}"


def _mono_key(mono: Monomial):
    return sum(abs(e) for _, e in mono), mono


class WeightExpr:
    """Exact Laurent polynomial in the weight symbols w(s, t)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: dict = {}
        for mono, coeff in (terms or {}).items():
            clean[mono] = clean.get(mono, 0) + Fraction(coeff)
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def const(cls, c=1) -> "WeightExpr":
        return cls({(): c})

    @classmethod
    def symbol(cls, s: int, t: int, exponent: int = 1) -> "WeightExpr":
        WeightSymbol(s, t)  # validates t >= 1
        if exponent == 0:
            return cls.const(1)
        return cls({(((s, t), exponent),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[tuple[int, int], int], c=1) -> "WeightExpr":
        for s, t in exps:
            WeightSymbol(s, t)
        return cls({tuple(sorted((st, e) for st, e in exps.items() if e)): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def symbols(self) -> set:
        return {st for mono in self._terms for st, _ in mono}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # arithmetic
    def __add__(self, other) -> "WeightExpr":
        if not isinstance(other, (WeightExpr, int, Fraction)):
            return NotImplemented
        other = _as_expr(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return WeightExpr(out)

    __radd__ = __add__

    def __neg__(self) -> "WeightExpr":
        return WeightExpr({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "WeightExpr":
        return self + (-_as_expr(other))

    def __rsub__(self, other) -> "WeightExpr":
        return _as_expr(other) - self

    def __mul__(self, other) -> "WeightExpr":
        if isinstance(other, (int, Fraction)):
            return WeightExpr({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, WeightExpr):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return WeightExpr(out)

    __rmul__ = __mul__

    def inverse(self) -> "WeightExpr":
        """Inverse of a single nonzero monomial term."""
        if len(self._terms) != 1:
            raise ValueError("only monomials are invertible in the Laurent ring")
        (mono, c), = self._terms.items()
        return WeightExpr({tuple((st, -e) for st, e in mono): 1 / c})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeightExpr.const(other)
        if not isinstance(other, WeightExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # symbol maps
    def map_symbols(self, fn: Callable[[int, int, int], tuple[int, int, int]]) -> "WeightExpr":
        """Rename every factor ``w(s,t)^e`` to ``w(s',t')^e'`` with ``fn(s,t,e)``."""
        out: dict = {}
        for mono, c in self._terms.items():
            exps: dict = {}
            for (s, t), e in mono:
                s2, t2, e2 = fn(s, t, e)
                WeightSymbol(s2, t2)
                exps[(s2, t2)] = exps.get((s2, t2), 0) + e2
            key = tuple(sorted((st, e) for st, e in exps.items() if e))
            out[key] = out.get(key, 0) + c
        return WeightExpr(out)

    def shift(self, ds: int = 0, dt: int = 0) -> "WeightExpr":
        """Substitute w(s, t) -> w(s + ds, t + dt)."""
        if ds == 0 and dt == 0:
            return self
        return self.map_symbols(lambda s, t, e: (s + ds, t + dt, e))

    # notation
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in sorted(self._terms.items(), key=lambda mc: _mono_key(mc[0])):
            parts.append(("- " if c < 0 else "+ ") + _term_text(mono, abs(c)))
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    def __repr__(self):
        return f"WeightExpr({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "WeightExpr":
        """Parse notation like ``1 + w(1,1) - 1/2 w(0,1)^-1w(2,3)``."""
        tokens = tokenize(text)
        expr, pos = parse_weight_sum(tokens, 0)
        if pos != len(tokens):
            raise ValueError(f"unexpected trailing input in {text!r}")
        return expr


def _as_expr(value) -> WeightExpr:
    if isinstance(value, WeightExpr):
        return value
    if isinstance(value, (int, Fraction)):
        return WeightExpr.const(value)
    raise TypeError(f"cannot use {type(value).__name__} as a weight expression")


# --- shared tokenizer for weight and normal-polynomial notation -------------

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<w>w\((?P<ws>-?\d+),(?P<wt>\d+)\)(?:\^(?P<we>-?\d+))?)"
    r"|(?P<x>x(?:\^(?P<xe>-?\d+))?)"
    r"|(?P<y>y(?:\^(?P<ye>\d+))?)"
    r"|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<op>[-+()])"
    r")"
)


def tokenize(text: str) -> list[tuple]:
    """Split weight / normal-polynomial notation into tokens.

    Tokens are ``("w", s, t, e)``, ``("x", k)``, ``("y", l)``,
    ``("num", Fraction)`` and ``("op", ch)`` for ``+ - ( )``.
    """
    text = text.replace("−", "-").strip()
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot tokenize {text[pos:]!r}")
        pos = m.end()
        if m.group("w"):
            tokens.append(("w", int(m.group("ws")), int(m.group("wt")), int(m.group("we") or 1)))
        elif m.group("x"):
            tokens.append(("x", int(m.group("xe") or 1)))
        elif m.group("y"):
            tokens.append(("y", int(m.group("ye") or 1)))
        elif m.group("num"):
            tokens.append(("num", Fraction(m.group("num"))))
        else:
            tokens.append(("op", m.group("op")))
    return tokens


def parse_weight_term(tokens: list, pos: int) -> tuple[WeightExpr, int]:
    """[num] w-symbol* (at least one of them)."""
    start = pos
    coeff = Fraction(1)
    if pos < len(tokens) and tokens[pos][0] == "num":
        coeff = tokens[pos][1]
        pos += 1
    exps: dict = {}
    while pos < len(tokens) and tokens[pos][0] == "w":
        _, s, t, e = tokens[pos]
        exps[(s, t)] = exps.get((s, t), 0) + e
        pos += 1
    if pos == start:
        raise ValueError("expected a number or a weight symbol")
    return WeightExpr.monomial(exps, coeff), pos


def parse_weight_sum(tokens: list, pos: int) -> tuple[WeightExpr, int]:
    total = WeightExpr()
    first = True
    while pos < len(tokens):
        sign = 1
        tok = tokens[pos]
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            pos += 1
        elif not first:
            break
        first = False
        term, pos = parse_weight_term(tokens, pos)
        total = total + term * sign
    if first:
        raise ValueError("empty weight expression")
    return total, pos


# --- constructors ------------------------------------------------------------


def big_weight_expr(s: int, t: int) -> WeightExpr:
    """W(s, t) = w(s, 1) w(s, 2) ... w(s, t); W(s, 0) = 1."""
    if t < 0:
        raise ValueError(f"big weights need t >= 0, got {t}")
    return WeightExpr.monomial({(s, j): 1 for j in range(1, t + 1)})


def interchange_weight(l: int, m: int) -> WeightExpr:
    """The weight I with y^l x^m = I x^m y^l.

    For m >= 0 this is prod_{i=1}^m W(i, l); for m < 0 it is
    prod_{i=m+1}^0 W(i, l)^-1.
    """
    exps: dict = {}
    if m >= 0:
        rng, e = range(1, m + 1), 1
    else:
        rng, e = range(m + 1, 1), -1
    for i in rng:
        for j in range(1, l + 1):
            exps[(i, j)] = e
    return WeightExpr.monomial(exps)


def dual_weight_map(e: WeightExpr) -> WeightExpr:
    """w(s, t)^k -> w(1 - s - t, t)^-k on every factor."""
    return e.map_symbols(lambda s, t, k: (1 - s - t, t, -k))


# --- environments ------------------------------------------------------------


@dataclass(frozen=True)
class WeightEnv:
    """A way to give the symbols w(s, t) values.

    ``kind`` is one of ``generic``, ``q``, ``elliptic``, ``custom``.  The
    generic environment keeps everything symbolic and cannot evaluate.
    """

    kind: str
    fn: Callable[[int, int], object] | None = None
    q: object = None
    ep: EllipticParams | None = None

    @classmethod
    def generic(cls) -> "WeightEnv":
        return cls("generic")

    @classmethod
    def q_mode(cls, q) -> "WeightEnv":
        """Constant weights w(s, t) = q (the p -> 0, a -> 0, b -> 0 limit)."""
        return cls("q", fn=lambda s, t: q, q=q)

    @classmethod
    def elliptic(cls, ep: EllipticParams, cfg: ThetaConfig = DEFAULT_CONFIG) -> "WeightEnv":
        return cls("elliptic", fn=lambda s, t: small_weight(ep, s, t, cfg), ep=ep)

    @classmethod
    def custom(cls, fn: Callable[[int, int], object]) -> "WeightEnv":
        return cls("custom", fn=fn)

    @classmethod
    def trivial(cls) -> "WeightEnv":
        """All weights equal to 1: the free algebra with commuting x, y."""
        return cls.custom(lambda s, t: 1)

    @property
    def is_generic(self) -> bool:
        return self.kind == "generic"

    def __call__(self, s: int, t: int):
        if self.fn is None:
            raise EnvDomainError("the generic environment has no numeric weights")
        try:
            value = self.fn(s, t)
        except EnvDomainError:
            raise
        except Exception as exc:  # undefined at (s, t)
            raise EnvDomainError(f"weight environment undefined at w({s},{t}): {exc}") from exc
        if value is None or value == 0:
            raise EnvDomainError(f"weight environment is zero or undefined at w({s},{t})")
        return value


def evaluate(e: WeightExpr, env: WeightEnv):
    """Sum over monomials of coefficient * prod env(s, t)^exponent.

    Exact for Fraction-valued environments, complex otherwise.
    """
    cache: dict = {}
    total = 0
    for mono, c in e:
        value = c
        for (s, t), k in mono:
            if (s, t) not in cache:
                cache[(s, t)] = env(s, t)
            value = value * cache[(s, t)] ** k
        total = total + value
    return total
