"""Weight-dependent binomial coefficients and Fibonacci polynomials."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .normal import NormalPoly, dual_normal, mul_normal, normal_order
from .weights import WeightEnv, WeightExpr, big_weight_expr
from .words import WordPoly, dual_substitution, fib_word, sign

__all__ = [
    "weighted_binom",
    "lattice_paths",
    "lattice_path_oracle",
    "binomial_expansion",
    "binomial_theorem_check",
    "fib_weighted",
    "dual_fib_weighted",
    "check_weighted_sum_formula",
    "check_weighted_euler_cassini",
]

X = NormalPoly.monomial(1, 0)
XINV = NormalPoly.monomial(-1, 0)


@lru_cache(maxsize=None)
def weighted_binom(n: int, k: int) -> WeightExpr:
    """Weight-dependent binomial coefficient from the Pascal-type recursion.

    [0, 0] = 1, [n, k] = 0 for k < 0 or k > n, and
    [n+1, k] = [n, k] + [n, k-1] W(k, n+1-k).
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return WeightExpr()
    if n == 0:
        return WeightExpr.const(1)
    return weighted_binom(n - 1, k) + weighted_binom(n - 1, k - 1) * big_weight_expr(k, n - k)


def lattice_paths(east: int, north: int):
    """All monotone paths (0,0) -> (east, north) as strings of 'E' / 'N'."""
    for spots in itertools.combinations(range(east + north), east):
        steps = ["N"] * (east + north)
        for i in spots:
            steps[i] = "E"
        yield "".join(steps)


def lattice_path_oracle(n: int, k: int) -> WeightExpr:
    """Sum of path weights over all paths (0,0) -> (k, n-k).

    An east step (s-1, t) -> (s, t) carries the big weight W(s, t); north
    steps carry 1.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    total = WeightExpr()
    for path in lattice_paths(k, n - k):
        s = t = 0
        weight = WeightExpr.const(1)
        for step in path:
            if step == "E":
                s += 1
                weight = weight * big_weight_expr(s, t)
            else:
                t += 1
        total = total + weight
    return total


def binomial_expansion(n: int) -> NormalPoly:
    """Normal form of (x + y)^n, expanded as a word polynomial first."""
    word = WordPoly.const(1)
    x_plus_y = WordPoly.letters("x") + WordPoly.letters("y")
    for _ in range(n):
        word = word * x_plus_y
    return normal_order(word)


def binomial_theorem_check(n: int) -> bool:
    """(x + y)^n == sum_k [n, k] x^k y^(n-k) in C_w[x, y], exactly."""
    rhs = NormalPoly({(k, n - k): weighted_binom(n, k) for k in range(n + 1)})
    return binomial_expansion(n) == rhs


@lru_cache(maxsize=None)
def _fib_symbolic(n: int) -> NormalPoly:
    if n >= 0:
        return NormalPoly({(k, n - 2 * k): weighted_binom(n - k, k) for k in range(n // 2 + 1)})
    if n == -1:
        return NormalPoly()
    m = -n
    return dual_normal(_fib_symbolic(m - 2)) * XINV * sign(m)


def fib_weighted(n: int, env: WeightEnv | None = None):
    """Normalized weight-dependent Fibonacci polynomial F_n(x, y | w).

    For n >= 0 the coefficient of x^k y^(n-2k) is [n-k, k]; negative
    indices use F_{-m} = (-1)^m F_{m-2}(x^-1, x^-1 y | dual w) x^-1.  With a
    non-generic ``env`` the coefficients are evaluated and a dict
    ``{(k, l): value}`` is returned instead of a NormalPoly.
    """
    poly = _fib_symbolic(n)
    if env is None or env.is_generic:
        return poly
    return poly.evaluate(env)


@lru_cache(maxsize=None)
def dual_fib_weighted(n: int) -> NormalPoly:
    """F_n(x^-1, x^-1 y | dual w): substitute into the free polynomial, then normal-order."""
    return normal_order(dual_substitution(fib_word(n)))


def check_weighted_sum_formula(m: int, n: int) -> bool:
    """F_{m+n} == F_{m-1} x F_{n-1} + F_m F_n with weights, exactly."""
    F = fib_weighted
    return F(m + n) == mul_normal(F(m - 1) * X, F(n - 1)) + F(m) * F(n)


def check_weighted_euler_cassini(n: int, k: int) -> bool:
    """(-1)^n F_k == D_{n-2} x^-1 F_{n+k} - D_{n-1} F_{n+k-1} exactly, where
    D_j = F_j(x^-1, x^-1 y | dual w)."""
    F, D = fib_weighted, dual_fib_weighted
    lhs = F(k) * sign(n)
    rhs = D(n - 2) * XINV * F(n + k) - D(n - 1) * F(n + k - 1)
    return lhs == rhs
