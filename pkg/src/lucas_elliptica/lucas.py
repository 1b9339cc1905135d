"""Classical and level-dependent Lucas sequences.

The level-dependent system is

    <0>_l = 0,  <1>_l = 1,  <n>_l = P_l <n-1>_{l+1} + Q_l <n-2>_{l+2},

and :func:`lucas_level_symbolic` expands ``<n>_l`` as an integer polynomial
in the commuting indeterminates ``P_i``, ``Q_i`` (absolute level indices).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Mapping

from .elliptic import EllipticParams, elliptic_integer
from .errors import DomainError
from .theta import DEFAULT_CONFIG, ThetaConfig, relative_residual, theta_quotient

__all__ = [
    "Var",
    "CommutingPoly",
    "LevelAssignment",
    "lucas_classical",
    "lucas_level_symbolic",
    "elliptic_PQ",
    "elliptic_assignment",
    "verify_elliptic_solution",
    "scale_transform",
    "q_integer",
    "fibonacci_number",
    "check_classical_specializations",
    "check_scaling_law",
]

# A variable is ("P", level) or ("Q", level); tuples sort by kind then level.
Var = tuple

Monomial = tuple  # sorted tuple of Var, repeated for powers


class CommutingPoly:
    """Integer polynomial in the indexed variables P_l, Q_l."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict = {}
        for mono, coeff in (terms or {}).items():
            key = tuple(sorted(mono))
            clean[key] = clean.get(key, 0) + coeff
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def var(cls, kind: str, level: int) -> "CommutingPoly":
        if kind not in ("P", "Q"):
            raise ValueError(f"unknown variable kind {kind!r}")
        return cls({((kind, level),): 1})

    @classmethod
    def const(cls, c: int) -> "CommutingPoly":
        return cls({(): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: "CommutingPoly") -> "CommutingPoly":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return CommutingPoly(out)

    def __mul__(self, other: "CommutingPoly") -> "CommutingPoly":
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, 0) + c1 * c2
        return CommutingPoly(out)

    def __eq__(self, other):
        if not isinstance(other, CommutingPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, assignment: "LevelAssignment"):
        total = 0
        for mono, coeff in self._terms.items():
            value = coeff
            for kind, level in mono:
                value = value * (assignment.P(level) if kind == "P" else assignment.Q(level))
            total = total + value
        return total

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in sorted(self._terms.items(), key=lambda mc: (len(mc[0]), mc[0])):
            factors = []
            for (kind, level), power in sorted(Counter(mono).items()):
                factors.append(f"{kind}_{level}" + (f"^{power}" if power > 1 else ""))
            body = "*".join(factors)
            if not body:
                body = str(abs(coeff))
            elif abs(coeff) != 1:
                body = f"{abs(coeff)}*{body}"
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    __repr__ = __str__


@dataclass(frozen=True)
class LevelAssignment:
    """Numeric (or exact) values for the sequences P_l and Q_l."""

    P: Callable[[int], object]
    Q: Callable[[int], object]

    @classmethod
    def constant(cls, P, Q) -> "LevelAssignment":
        return cls(P=lambda _l: P, Q=lambda _l: Q)


def lucas_classical(n: int, P, Q):
    """Lucas' generalized Fibonacci polynomial <n> at scalar P, Q."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    prev, cur = 0 * P, 0 * P + 1  # <0>, <1> in the scalar type of P
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, P * cur + Q * prev
    return cur


@lru_cache(maxsize=None)
def lucas_level_symbolic(n: int, level: int) -> CommutingPoly:
    """<n>_level as an integer polynomial in P_i, Q_i."""
    if n < 0 or level < 0:
        raise DomainError(f"n and level must be non-negative, got n={n}, level={level}")
    if n == 0:
        return CommutingPoly()
    if n == 1:
        return CommutingPoly.const(1)
    P = CommutingPoly.var("P", level)
    Q = CommutingPoly.var("Q", level)
    return P * lucas_level_symbolic(n - 1, level + 1) + Q * lucas_level_symbolic(n - 2, level + 2)


def elliptic_PQ(level: int, ep: EllipticParams, cfg: ThetaConfig = DEFAULT_CONFIG) -> tuple[complex, complex]:
    """The theta-quotient coefficients (P_l, Q_l) of the elliptic solution."""
    a, b, q, p = ep.a, ep.b, ep.q, ep.p
    l = level
    denom = (a * q ** (l + 1), b * q ** (2 * l + 3), a * q ** (1 - l) / b)
    P = theta_quotient(
        (q**2, a * q ** (l + 2), b * q ** (2 * l + 2), a * q ** (-l) / b),
        (q,) + denom,
        p,
        cfg,
    )
    Q = -theta_quotient(
        (a * q ** (l + 3), b * q ** (2 * l + 1), a * q ** (-1 - l) / b), denom, p, cfg
    ) * q
    return P, Q


def elliptic_assignment(ep: EllipticParams, cfg: ThetaConfig = DEFAULT_CONFIG) -> LevelAssignment:
    """LevelAssignment realising the elliptic P_l, Q_l."""
    return LevelAssignment(P=lambda l: elliptic_PQ(l, ep, cfg)[0], Q=lambda l: elliptic_PQ(l, ep, cfg)[1])


def verify_elliptic_solution(n_max: int, level_max: int, ep: EllipticParams, cfg: ThetaConfig = DEFAULT_CONFIG) -> float:
    """Max residual of <n>_l = P_l <n-1>_{l+1} + Q_l <n-2>_{l+2} with every
    quantity taken from its closed form, over 2 <= n <= n_max, 0 <= l <= level_max."""
    if n_max < 2:
        raise DomainError(f"n_max must be at least 2, got {n_max}")
    worst = 0.0
    for l in range(level_max + 1):
        P, Q = elliptic_PQ(l, ep, cfg)
        for n in range(2, n_max + 1):
            lhs = elliptic_integer(n, l, ep, cfg)
            rhs = P * elliptic_integer(n - 1, l + 1, ep, cfg) + Q * elliptic_integer(n - 2, l + 2, ep, cfg)
            worst = max(worst, relative_residual(lhs, rhs))
    return worst


def scale_transform(c: Callable[[int], object], la: LevelAssignment) -> LevelAssignment:
    """Scaled assignment P~_l = c_l P_l, Q~_l = c_l c_{l+1} Q_l."""
    return LevelAssignment(P=lambda l: c(l) * la.P(l), Q=lambda l: c(l) * c(l + 1) * la.Q(l))


def q_integer(n: int, q):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return sum((q**i for i in range(n)), 0 * q)


def fibonacci_number(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1, by fast doubling."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")

    def pair(m: int) -> tuple[int, int]:
        if m == 0:
            return 0, 1
        f, g = pair(m // 2)
        c = f * (2 * g - f)
        d = f * f + g * g
        return (d, c + d) if m % 2 else (c, d)

    return pair(n)[0]


def check_classical_specializations(n_max: int = 15, q=Fraction(2, 3), c=Fraction(3, 5)) -> dict[str, bool]:
    """Exact checks of the classical reductions of <n> for 0 <= n <= n_max.

    fibonacci: P = Q = 1 gives F_n; integers: P = 2, Q = -1 gives n;
    q_integers: P = 1 + q, Q = -q gives [n]_q; scaled_q_integers:
    P = c(1 + q), Q = -c^2 q gives c^(n-1) [n]_q (n >= 1).
    """
    ns = range(n_max + 1)
    return {
        "fibonacci": all(lucas_classical(n, 1, 1) == fibonacci_number(n) for n in ns),
        "integers": all(lucas_classical(n, 2, -1) == n for n in ns),
        "q_integers": all(lucas_classical(n, 1 + q, -q) == q_integer(n, q) for n in ns),
        "scaled_q_integers": all(
            lucas_classical(n, c * (1 + q), -c * c * q) == c ** (n - 1) * q_integer(n, q) for n in ns if n >= 1
        ),
    }


def check_scaling_law(c: Callable[[int], object], la: LevelAssignment, n_max: int = 8, level_max: int = 4) -> bool:
    """<n~>_l == c_l c_{l+1} ... c_{l+n-2} <n>_l for 1 <= n <= n_max, 0 <= l <= level_max.

    Both sides come from evaluating :func:`lucas_level_symbolic`; with exact
    (Fraction) inputs the comparison is exact.
    """
    scaled = scale_transform(c, la)
    for level in range(level_max + 1):
        for n in range(1, n_max + 1):
            factor = 1
            for i in range(n - 1):
                factor = factor * c(level + i)
            poly = lucas_level_symbolic(n, level)
            if poly.evaluate(scaled) != factor * poly.evaluate(la):
                return False
    return True
