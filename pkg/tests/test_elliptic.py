import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import close
from lucas_elliptica.elliptic import (
    EllipticParams,
    big_weight,
    dual_small_weight,
    elliptic_binom,
    elliptic_binom_recursive,
    elliptic_integer,
    q_binom,
    q_pochhammer,
    second_recurrence_residual,
    small_weight,
    wbineq_residual,
)
from lucas_elliptica.errors import DomainError
from lucas_elliptica.theta import theta_product


def test_params_validation():
    with pytest.raises(DomainError):
        EllipticParams(0, 1, 0.9, 0.1)
    with pytest.raises(DomainError):
        EllipticParams(1, 1, 0.9, 1.2)
    ep = EllipticParams(2, 4, 0.5, 0.1)
    assert ep.dual().a == 0.5 and ep.dual().b == 0.25
    assert ep.dual().dual() == ep
    assert ep.shifted(1, 2).a == 1 and ep.shifted(1, 2).b == 1


def test_small_weight_term_by_term(ep):
    a, b, q, p = ep.a, ep.b, ep.q, ep.p
    s, t = 2, 3
    numer = theta_product([a * q**8, b * q**5, a / b], p)
    denom = theta_product([a * q**6, b * q**7, a * q**2 / b], p)
    assert close(small_weight(ep, s, t), numer / denom * q, 1e-14)


def test_small_weight_degenerates_to_q():
    q = 0.9 * cmath.exp(0.3j)
    # a -> 0 first, then b -> 0: a must be much smaller than b
    ep = EllipticParams(1e-12, 1e-6, q, 0)
    for s, t in [(0, 1), (1, 1), (-2, 3), (3, 2)]:
        assert abs(small_weight(ep, s, t) - q) < 1e-4


@pytest.mark.parametrize("s,t", [(0, 1), (1, 1), (-3, 2), (2, 4)])
def test_small_weight_shift_law(ep, s, t):
    assert close(small_weight(ep, s + 1, t + 2), small_weight(ep.shifted(5, 4), s, t), 1e-12)


@pytest.mark.parametrize("s", [-2, 0, 1, 3])
def test_big_weight_is_product_of_small_weights(ep, s):
    assert big_weight(ep, s, 0) == pytest.approx(1)
    prod = small_weight(ep, s, 1) * small_weight(ep, s, 2) * small_weight(ep, s, 3)
    assert close(big_weight(ep, s, 3), prod, 1e-12)


@pytest.mark.parametrize("t", [-3, -1, 0, 2])
def test_big_weight_shift_law(ep, t):
    # W(s, t + j) = W(s, j) W_{a q^{2j}, b q^j}(s, t), here j = 1, including negative t
    s = 1
    assert close(big_weight(ep, s, t + 1), big_weight(ep, s, 1) * big_weight(ep.shifted(2, 1), s, t), 1e-12)


@pytest.mark.parametrize("s,t", [(1, 1), (0, 2), (-2, 3), (3, 1)])
def test_dual_weight_is_inverted_reflection(ep, s, t):
    assert close(dual_small_weight(ep, s, t), 1 / small_weight(ep, 1 - s - t, t), 1e-12)
    dual_of_dual = small_weight(ep.dual().dual(), s, t)
    assert close(dual_of_dual, small_weight(ep, s, t), 1e-12)


@pytest.mark.parametrize("s,t", [(1, 1), (-1, 2), (2, 3)])
def test_total_ellipticity(ep, s, t):
    w = small_weight(ep, s, t)
    p = ep.p
    assert close(small_weight(EllipticParams(ep.a * p, ep.b, ep.q, p), s, t), w, 1e-11)
    assert close(small_weight(EllipticParams(ep.a, ep.b * p, ep.q, p), s, t), w, 1e-11)


def test_elliptic_binom_boundaries(ep):
    for n in range(6):
        assert close(elliptic_binom(n, n, ep), 1, 1e-14)
        assert close(elliptic_binom(n, 0, ep), 1, 1e-13)
        assert elliptic_binom(n, -1, ep) == 0
        assert elliptic_binom(n, n + 1, ep) == 0
    with pytest.raises(DomainError):
        elliptic_binom(-1, 0, ep)


def test_elliptic_binom_matches_recursive_oracle(ep):
    for n in range(9):
        for k in range(n + 1):
            assert close(elliptic_binom(n, k, ep), elliptic_binom_recursive(n, k, ep), 1e-10)


def test_recurrence_residuals(ep):
    assert second_recurrence_residual(0, 0, ep) == 0
    assert second_recurrence_residual(3, 2, ep) <= 1e-10
    assert second_recurrence_residual(5, 5, ep) <= 1e-10
    assert max(wbineq_residual(n, k, ep) for n in range(9) for k in range(n + 2)) <= 1e-10
    with pytest.raises(DomainError):
        second_recurrence_residual(2, 4, ep)


def test_elliptic_integers(ep):
    for level in range(4):
        assert elliptic_integer(0, level, ep) == 0
        assert close(elliptic_integer(1, level, ep), 1, 1e-14)
        for n in range(1, 11):
            assert close(elliptic_integer(n, level, ep), elliptic_binom(n, n - 1, ep.shifted(level, 2 * level)), 1e-11)


def test_q_binom_examples():
    q = Fraction(3, 7)
    assert q_binom(4, 2, q) == 1 + q + 2 * q**2 + q**3 + q**4
    assert q_binom(5, 0, q) == 1
    assert q_binom(3, 1, 2) == 7
    assert q_binom(3, 4, q) == 0
    with pytest.raises(DomainError):
        q_binom(3, 1, -1)
    assert q_pochhammer(2, 3, 2) == (1 - 2) * (1 - 6)


@given(st.integers(0, 10), st.integers(0, 10), st.fractions(Fraction(-3), Fraction(3), max_denominator=20))
def test_q_binom_recurrences(n, k, q):
    if q in (0, 1, -1):
        return
    lhs = q_binom(n + 1, k, q)
    assert lhs == q_binom(n, k, q) + q_binom(n, k - 1, q) * q ** (n + 1 - k)
    assert lhs == q_binom(n, k, q) * q**k + q_binom(n, k - 1, q)
