"""Elliptic weights, elliptic binomial coefficients and elliptic integers.

Every closed form here is a quotient of theta products in the nome ``p``
with arguments built from ``a``, ``b`` and integer powers of the base
``q``.  Denominator factors go through :func:`theta_quotient`, so a
numerically vanishing denominator raises :class:`SingularValue`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import DomainError
from .theta import (
    DEFAULT_CONFIG,
    ThetaConfig,
    as_complex,
    qp_factorial,
    relative_residual,
    theta_quotient,
)

__all__ = [
    "EllipticParams",
    "small_weight",
    "big_weight",
    "dual_small_weight",
    "elliptic_binom",
    "elliptic_binom_recursive",
    "second_recurrence_residual",
    "wbineq_residual",
    "elliptic_integer",
    "q_pochhammer",
    "q_binom",
]


@dataclass(frozen=True)
class EllipticParams:
    """The independent variables ``a``, ``b``, the base ``q`` and the nome ``p``."""

    a: complex
    b: complex
    q: complex
    p: complex = 0j

    def __post_init__(self):
        for name in ("a", "b", "q", "p"):
            object.__setattr__(self, name, as_complex(getattr(self, name)))
        if abs(self.p) >= 1:
            raise DomainError(f"nome must satisfy |p| < 1, got |p| = {abs(self.p)}")
        for name in ("a", "b", "q"):
            if getattr(self, name) == 0:
                raise DomainError(f"{name} must be nonzero")

    def shifted(self, a_pow: int = 0, b_pow: int = 0) -> "EllipticParams":
        """Parameters with ``a -> a q^a_pow`` and ``b -> b q^b_pow``."""
        q = self.q
        return replace(self, a=self.a * q**a_pow, b=self.b * q**b_pow)

    def dual(self) -> "EllipticParams":
        """The dual parameters ``(a/b, 1/b)``."""
        return replace(self, a=self.a / self.b, b=1 / self.b)

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "q": self.q, "p": self.p}


def small_weight(ep: EllipticParams, s: int, t: int, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """Small elliptic weight w_{a,b;q,p}(s, t)."""
    a, b, q, p = ep.a, ep.b, ep.q, ep.p
    numer = (a * q ** (s + 2 * t), b * q ** (2 * s + t - 2), a * q ** (t - s - 1) / b)
    denom = (a * q ** (s + 2 * t - 2), b * q ** (2 * s + t), a * q ** (t - s + 1) / b)
    return theta_quotient(numer, denom, p, cfg) * q


def big_weight(ep: EllipticParams, s: int, t: int, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """Big elliptic weight W_{a,b;q,p}(s, t), closed form valid for every integer t.

    For t >= 0 it equals the product of ``small_weight(ep, s, k)`` over
    1 <= k <= t.
    """
    a, b, q, p = ep.a, ep.b, ep.q, ep.p
    numer = (
        a * q ** (s + 2 * t),
        b * q ** (2 * s),
        b * q ** (2 * s - 1),
        a * q ** (1 - s) / b,
        a * q ** (-s) / b,
    )
    denom = (
        a * q**s,
        b * q ** (2 * s + t),
        b * q ** (2 * s + t - 1),
        a * q ** (t - s + 1) / b,
        a * q ** (t - s) / b,
    )
    return theta_quotient(numer, denom, p, cfg) * q**t


def dual_small_weight(ep: EllipticParams, s: int, t: int, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """Dual weight w(1-s-t, t)^-1, realised as the small weight at (a/b, 1/b)."""
    return small_weight(ep.dual(), s, t, cfg)


def elliptic_binom(n: int, k: int, ep: EllipticParams, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """Elliptic binomial coefficient [n, k]_{a,b;q,p}; zero outside 0 <= k <= n."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0j
    a, b, q, p = ep.a, ep.b, ep.q, ep.p
    m = n - k
    if m == 0 or k == 0:  # empty products, or numerator and denominator coincide
        return 1 + 0j
    numer = 1 + 0j
    for base in (q ** (1 + k), a * q ** (1 + k), b * q ** (1 + k), a * q ** (1 - k) / b):
        numer *= qp_factorial(base, m, q, p, cfg)
    # the denominator factorials, expanded so each theta factor is guarded
    denom_args = [
        base * q**j for base in (q, a * q, b * q ** (1 + 2 * k), a * q / b) for j in range(m)
    ]
    return numer * theta_quotient((), denom_args, p, cfg)


def elliptic_binom_recursive(n: int, k: int, ep: EllipticParams, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """[n, k] built from the Pascal-type recursion with elliptic big weights.

    [n+1, k] = [n, k] + [n, k-1] W(k, n+1-k), with [0, 0] = 1.  Serves as an
    oracle for :func:`elliptic_binom`.
    """
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0j
    row = [1 + 0j]
    for m in range(n):
        nxt = []
        for j in range(m + 2):
            left = row[j] if j <= m else 0j
            diag = row[j - 1] * big_weight(ep, j, m + 1 - j, cfg) if j >= 1 else 0j
            nxt.append(left + diag)
        row = nxt
    return row[k]


def wbineq_residual(n: int, k: int, ep: EllipticParams, cfg: ThetaConfig = DEFAULT_CONFIG) -> float:
    """Residual of [n+1, k] = [n, k] + [n, k-1] W(k, n+1-k) in closed form."""
    lhs = elliptic_binom(n + 1, k, ep, cfg)
    rhs = elliptic_binom(n, k, ep, cfg)
    if k >= 1:
        rhs += elliptic_binom(n, k - 1, ep, cfg) * big_weight(ep, k, n + 1 - k, cfg)
    return relative_residual(lhs, rhs)


def second_recurrence_residual(n: int, k: int, ep: EllipticParams, cfg: ThetaConfig = DEFAULT_CONFIG) -> float:
    """Residual of the first-step recurrence

    [n+1, k]_{a,b} = [n, k]_{aq^2, bq} prod_{j=1}^k W_{a,b}(j, 1) + [n, k-1]_{aq, bq^2}.
    """
    if not 0 <= k <= n + 1:
        raise DomainError(f"need 0 <= k <= n + 1, got n={n}, k={k}")
    lhs = elliptic_binom(n + 1, k, ep, cfg)
    column = 1 + 0j
    for j in range(1, k + 1):
        column *= big_weight(ep, j, 1, cfg)
    rhs = elliptic_binom(n, k, ep.shifted(2, 1), cfg) * column
    if k >= 1:
        rhs += elliptic_binom(n, k - 1, ep.shifted(1, 2), cfg)
    return relative_residual(lhs, rhs)


def elliptic_integer(n: int, level: int, ep: EllipticParams, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """Elliptic integer <n>_level solving the level-dependent Lucas recurrence."""
    if n < 0 or level < 0:
        raise DomainError(f"n and level must be non-negative, got n={n}, level={level}")
    a, b, q, p = ep.a, ep.b, ep.q, ep.p
    l = level
    numer = (q**n, a * q ** (l + n), b * q ** (2 * l + n), a * q ** (2 - l - n) / b)
    denom = (q, a * q ** (l + 1), b * q ** (2 * l + 2 * n - 1), a * q ** (1 - l) / b)
    return theta_quotient(numer, denom, p, cfg)


def q_pochhammer(a, q, n: int) -> Fraction:
    """Exact (a; q)_n over the rationals for any integer n."""
    a = Fraction(a)
    q = Fraction(q)
    result = Fraction(1)
    if n >= 0:
        for j in range(n):
            result *= 1 - a * q**j
        return result
    for j in range(-n):
        result *= 1 - a * q ** (n + j)
    if result == 0:
        raise DomainError("(a; q)_n has a vanishing denominator factor")
    return 1 / result


def q_binom(n: int, k: int, q) -> Fraction:
    """Exact q-binomial coefficient (q^{1+k}; q)_{n-k} / (q; q)_{n-k}.

    ``q`` is an int or Fraction; zero outside 0 <= k <= n.
    """
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    q = Fraction(q)
    if q == 0:
        raise DomainError("q must be nonzero")
    if k < 0 or k > n:
        return Fraction(0)
    denom = q_pochhammer(q, q, n - k)
    if denom == 0:
        raise DomainError(f"(q; q)_{n - k} vanishes at q = {q}")
    return q_pochhammer(q ** (1 + k), q, n - k) / denom
