"""Numeric model of the algebra of elliptic-commuting variables.

Elements are finite sums ``f(a, b) x^k y^l`` whose coefficients are
functions of the two independent variables.  Multiplication only uses the
defining single-step relations

    y x      = w11(a, b) x y
    x^-1 y   = g(a, b) y x^-1
    x f(a,b) = f(aq, bq^2) x,   x^-1 f(a,b) = f(a/q, b/q^2) x^-1,
    y f(a,b) = f(aq^2, bq) y,

so it is independent of the symbolic weight calculus in :mod:`.normal`.
Coefficients are evaluated lazily and only at the end.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Mapping

from .elliptic import EllipticParams, elliptic_binom
from .theta import DEFAULT_CONFIG, ThetaConfig, relative_residual, theta_quotient

__all__ = [
    "EllipticAlgebra",
    "EllipticElement",
    "check_elliptic_euler_cassini",
    "check_elliptic_sum_formula",
]

Coeff = Callable[[complex, complex], complex]


def _cached(fn: Coeff) -> Coeff:
    return lru_cache(maxsize=None)(fn)


class EllipticAlgebra:
    """Fixes ``q``, ``p`` and the theta configuration for a family of elements."""

    def __init__(self, q: complex, p: complex = 0j, cfg: ThetaConfig = DEFAULT_CONFIG):
        self.q = complex(q)
        self.p = complex(p)
        self.cfg = cfg
        self.w11 = _cached(self._w11)
        self.g01 = _cached(self._g01)
        self._fib_memo: dict = {}
        self._dual_memo: dict = {}

    def _w11(self, a, b):
        q = self.q
        return theta_quotient((a * q**3, b * q, a / (b * q)), (a * q, b * q**3, a * q / b), self.p, self.cfg) * q

    def _g01(self, a, b):
        q = self.q
        return theta_quotient((a * q**2, b / q, a / b), (a, b * q, a * q**2 / b), self.p, self.cfg) * q

    # generators
    def zero(self) -> "EllipticElement":
        return EllipticElement(self, {})

    def const(self, f: Coeff | complex) -> "EllipticElement":
        if not callable(f):
            value = complex(f)
            f = lambda a, b: value  # noqa: E731
        return EllipticElement(self, {(0, 0): f})

    def one(self) -> "EllipticElement":
        return self.const(1)

    def x(self) -> "EllipticElement":
        return EllipticElement(self, {(1, 0): lambda a, b: 1})

    def xinv(self) -> "EllipticElement":
        return EllipticElement(self, {(-1, 0): lambda a, b: 1})

    def y(self) -> "EllipticElement":
        return EllipticElement(self, {(0, 1): lambda a, b: 1})

    # Fibonacci polynomials
    def fib(self, n: int) -> "EllipticElement":
        """F_n(x, y | a, b; q, p) as an element (negative n via the dual family)."""
        if n not in self._fib_memo:
            self._fib_memo[n] = self._fib(n)
        return self._fib_memo[n]

    def dual_fib(self, n: int) -> "EllipticElement":
        """F_n(x^-1, x^-1 y | a/b, 1/b; q, p)."""
        if n not in self._dual_memo:
            self._dual_memo[n] = self._dual_fib(n)
        return self._dual_memo[n]

    def _fib(self, n: int) -> "EllipticElement":
        if n == -1:
            return self.zero()
        if n < 0:
            m = -n
            return self.dual_fib(m - 2) * self.xinv() * (-1) ** m
        total = self.zero()
        for k in range(n // 2 + 1):
            coeff = self._binom_coeff(n - k, k, dual=False)
            total = total + EllipticElement(self, {(k, n - 2 * k): coeff})
        return total

    def _dual_fib(self, n: int) -> "EllipticElement":
        if n == -1:
            return self.zero()
        if n < 0:
            m = -n
            # applying the involution to F_{-m} = (-1)^m D_{m-2} x^-1
            return self.fib(m - 2) * self.x() * (-1) ** m
        X, Y = self.xinv(), self.xinv() * self.y()
        total = self.zero()
        for k in range(n // 2 + 1):
            term = self.const(self._binom_coeff(n - k, k, dual=True))
            for _ in range(k):
                term = term * X
            for _ in range(n - 2 * k):
                term = term * Y
            total = total + term
        return total

    def _binom_coeff(self, n: int, k: int, dual: bool) -> Coeff:
        q, p, cfg = self.q, self.p, self.cfg

        def coeff(a, b):
            if dual:
                a, b = a / b, 1 / b
            return elliptic_binom(n, k, EllipticParams(a, b, q, p), cfg)

        return _cached(coeff)


class EllipticElement:
    """Sum of ``f(a, b) x^k y^l`` in the elliptic-commuting algebra."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: EllipticAlgebra, terms: Mapping[tuple[int, int], Coeff]):
        self.alg = alg
        self.terms = dict(terms)

    def __add__(self, other: "EllipticElement") -> "EllipticElement":
        out = dict(self.terms)
        for key, g in other.terms.items():
            f = out.get(key)
            out[key] = g if f is None else _cached(lambda a, b, f=f, g=g: f(a, b) + g(a, b))
        return EllipticElement(self.alg, out)

    def __neg__(self) -> "EllipticElement":
        return self * (-1)

    def __sub__(self, other: "EllipticElement") -> "EllipticElement":
        return self + (-other)

    def __mul__(self, other) -> "EllipticElement":
        if isinstance(other, (int, float, complex)):
            c = complex(other)
            return EllipticElement(self.alg, {k: _cached(lambda a, b, f=f: c * f(a, b)) for k, f in self.terms.items()})
        total = self.alg.zero()
        for (m, n), g in other.terms.items():
            piece = self._times_coeff(g)
            for _ in range(abs(m)):
                piece = piece._times_x(1 if m > 0 else -1)
            total = total + EllipticElement(self.alg, {(k, l + n): f for (k, l), f in piece.terms.items()})
        return total

    def _times_coeff(self, g: Coeff) -> "EllipticElement":
        q = self.alg.q
        out = {}
        for (k, l), f in self.terms.items():
            # f x^k y^l g(a, b) = f(a, b) g(a q^(k+2l), b q^(2k+l)) x^k y^l
            out[(k, l)] = _cached(
                lambda a, b, f=f, k=k, l=l: f(a, b) * g(a * q ** (k + 2 * l), b * q ** (2 * k + l))
            )
        return EllipticElement(self.alg, out)

    def _times_x(self, direction: int) -> "EllipticElement":
        alg, q = self.alg, self.alg.q
        out = {}
        for (k, l), f in self.terms.items():
            # y^l x^(+-1) = prod_j r(a q^(2j), b q^j) x^(+-1) y^l, then move past x^k
            def coeff(a, b, f=f, k=k, l=l):
                value = f(a, b)
                for j in range(l):
                    aa, bb = a * q ** (k + 2 * j), b * q ** (2 * k + j)
                    value = value * alg.w11(aa, bb) if direction > 0 else value / alg.g01(aa, bb)
                return value

            out[(k + direction, l)] = _cached(coeff)
        return EllipticElement(alg, out)

    def evaluate(self, a: complex, b: complex) -> dict:
        """Numeric coefficients ``{(k, l): value}`` at the point (a, b)."""
        return {key: f(complex(a), complex(b)) for key, f in sorted(self.terms.items())}


def _max_residual(lhs: dict, rhs: dict) -> float:
    keys = set(lhs) | set(rhs)
    return max((relative_residual(lhs.get(k, 0j), rhs.get(k, 0j)) for k in keys), default=0.0)


def check_elliptic_euler_cassini(n: int, k: int, ep: EllipticParams, cfg: ThetaConfig = DEFAULT_CONFIG) -> float:
    """Max coefficient residual of the elliptic Euler-Cassini identity

        (-1)^n F_k = D_{n-2} x^-1 F_{n+k} - D_{n-1} F_{n+k-1},

    with D_j the Fibonacci polynomial in (x^-1, x^-1 y) at (a/b, 1/b).
    """
    alg = EllipticAlgebra(ep.q, ep.p, cfg)
    F, D = alg.fib, alg.dual_fib
    lhs = F(k) * (-1) ** n
    rhs = D(n - 2) * alg.xinv() * F(n + k) - D(n - 1) * F(n + k - 1)
    return _max_residual(lhs.evaluate(ep.a, ep.b), rhs.evaluate(ep.a, ep.b))


def check_elliptic_sum_formula(m: int, n: int, ep: EllipticParams, cfg: ThetaConfig = DEFAULT_CONFIG) -> float:
    """Max coefficient residual of F_{m+n} = F_{m-1} x F_{n-1} + F_m F_n."""
    alg = EllipticAlgebra(ep.q, ep.p, cfg)
    F = alg.fib
    lhs = F(m + n)
    rhs = F(m - 1) * alg.x() * F(n - 1) + F(m) * F(n)
    return _max_residual(lhs.evaluate(ep.a, ep.b), rhs.evaluate(ep.a, ep.b))
