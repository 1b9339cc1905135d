"""Acceptance criteria: one test per criterion, each printing a PASS/FAIL line.

Exact criteria compare symbolic objects with ``==``; numeric ones use the
library's symmetric residual |L - R| / (|L| + |R| + 1) over parameter points
drawn with ``trial_rng(0, trial)``.  Wall-clock budgets are asserted too.
"""

import time
from fractions import Fraction

from lucas_elliptica.elliptic import (
    elliptic_binom,
    elliptic_integer,
    q_binom,
    second_recurrence_residual,
    wbineq_residual,
)
from lucas_elliptica.elliptic_algebra import check_elliptic_euler_cassini
from lucas_elliptica.lucas import (
    LevelAssignment,
    check_classical_specializations,
    check_scaling_law,
    verify_elliptic_solution,
)
from lucas_elliptica.normal import normal_order
from lucas_elliptica.sampling import sample_generic, sample_theta_point, trial_rng
from lucas_elliptica.theta import identity_residuals, relative_residual
from lucas_elliptica.weighted import (
    binomial_theorem_check,
    check_weighted_euler_cassini,
    fib_weighted,
    lattice_path_oracle,
    weighted_binom,
)
from lucas_elliptica.weights import WeightEnv, evaluate
from lucas_elliptica.words import (
    C_power,
    C_power_pattern,
    WordPoly,
    check_euler_cassini,
    check_sum_formula,
    fib_word,
    nc_det,
    sign,
    tilings_oracle,
)

# Fibonacci polynomials as listed in the source for small and negative n.
GOLDEN = {
    0: "1",
    1: "y",
    2: "x + y^2",
    3: "xy + yx + y^3",
    4: "x^2 + xy^2 + yxy + y^2x + y^4",
    -1: "0",
    -2: "x^-1",
    -3: "- x^-1yx^-1",
    -4: "x^-2 + x^-1yx^-1yx^-1",
    -5: "- x^-2yx^-1 - x^-1yx^-2 - x^-1yx^-1yx^-1yx^-1",
    -6: "x^-3 + x^-2yx^-1yx^-1 + x^-1yx^-2yx^-1 + x^-1yx^-1yx^-2 + x^-1yx^-1yx^-1yx^-1yx^-1",
}


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def sampled(trials, probe, seed=0):
    """Worst probe value over ``trials`` generic parameter draws."""
    return max(sample_generic(trial_rng(seed, t), probe)[1] for t in range(trials))


def finish(record_criterion, name, ok, budget, timer, detail=""):
    in_time = timer.seconds < budget
    record_criterion(name, ok and in_time, f"{detail} ({timer.seconds:.2f}s < {budget}s)".strip())
    assert ok, name
    assert in_time, f"{name}: {timer.seconds:.2f}s exceeds {budget}s"


def test_free_algebra_golden_values(record_criterion):
    with Timer() as t:
        ok = all(fib_word(n) == WordPoly.parse(text) for n, text in GOLDEN.items())
    finish(record_criterion, "free-algebra golden values n=0..4,-1..-6", ok, 1, t, "exact")


def test_tilings_oracle_matches_recurrence(record_criterion):
    with Timer() as t:
        ok = all(tilings_oracle(n) == fib_word(n) for n in range(13))
        ok = ok and len(fib_word(12)) == 233
    finish(record_criterion, "tiling oracle = recurrence, n<=12", ok, 5, t, "exact")


def test_matrix_law_and_determinant(record_criterion):
    with Timer() as t:
        pattern = all(C_power(n) == C_power_pattern(n) for n in range(-6, 11))
        det = all(nc_det(C_power(n)) == WordPoly.const(sign(n)) for n in range(-6, 11))
    finish(record_criterion, "matrix law + nc determinant, n in [-6,10]", pattern and det, 10, t, "exact")


def test_cassini_suite(record_criterion):
    with Timer() as t:
        ok = all(check_sum_formula(m, n) for m in range(-5, 6) for n in range(-5, 6))
        ok = ok and all(check_euler_cassini(n, k) for n in range(-4, 7) for k in range(-3, 4))
    finish(record_criterion, "free-algebra sum formula + Euler-Cassini", ok, 30, t, "exact")


def test_weighted_symbolic_suite(record_criterion):
    with Timer() as t:
        paths = all(lattice_path_oracle(n, k) == weighted_binom(n, k) for n in range(9) for k in range(n + 1))
        binomial = all(binomial_theorem_check(n) for n in range(9))
        normal = all(normal_order(fib_word(n)) == fib_weighted(n) for n in range(11))
        cassini = all(check_weighted_euler_cassini(n, k) for n in range(-4, 7) for k in range(-2, 3))
    ok = paths and binomial and normal and cassini
    detail = f"exact paths={paths} binomial={binomial} normal={normal} cassini={cassini}"
    finish(record_criterion, "weighted-symbolic suite", ok, 60, t, detail)


def test_q_degeneration(record_criterion):
    q = Fraction(2, 3)
    with Timer() as t:
        env = WeightEnv.q_mode(q)
        ok = all(evaluate(weighted_binom(n, k), env) == q_binom(n, k, q) for n in range(11) for k in range(n + 1))
    finish(record_criterion, "q-degeneration at q=2/3, n<=10", ok, 1, t, "exact")


def test_theta_identities(record_criterion):
    with Timer() as t:
        worst = 0.0
        for trial in range(100):
            point = sample_theta_point(trial_rng(0, trial), p_max=0.5)
            worst = max(worst, *identity_residuals(**point))
    finish(record_criterion, "theta identities, 100 points |p|<=0.5", worst <= 1e-11, 1, t, f"max={worst:.2e}")


def _binomial_recurrences(ep):
    return max(
        max(wbineq_residual(n, k, ep), second_recurrence_residual(n, k, ep)) for n in range(9) for k in range(n + 1)
    )


def test_elliptic_binomial_recurrences(record_criterion):
    with Timer() as t:
        worst = sampled(20, _binomial_recurrences)
    finish(record_criterion, "elliptic binomial recurrences, n<=8", worst <= 1e-10, 5, t, f"max={worst:.2e}")


def _elliptic_integers(ep):
    return max(
        relative_residual(elliptic_integer(n, l, ep), elliptic_binom(n, n - 1, ep.shifted(l, 2 * l)))
        for n in range(1, 13)
        for l in range(9)
    )


def test_elliptic_lucas_solution(record_criterion):
    with Timer() as t:
        recurrence = sampled(20, lambda ep: verify_elliptic_solution(12, 8, ep))
        closed_form = sampled(20, _elliptic_integers)
    ok = recurrence <= 1e-9 and closed_form <= 1e-11
    detail = f"recurrence={recurrence:.2e} closed_form={closed_form:.2e}"
    finish(record_criterion, "elliptic Lucas solution, n<=12, level<=8", ok, 10, t, detail)


def test_classical_specializations(record_criterion):
    with Timer() as t:
        results = check_classical_specializations(15)
    detail = " ".join(f"{k}={v}" for k, v in results.items())
    finish(record_criterion, "classical specializations, n<=15", all(results.values()), 1, t, detail)


def _elliptic_cassini(ep):
    return max(check_elliptic_euler_cassini(n, k, ep) for n in range(-3, 6) for k in range(-2, 3))


def test_elliptic_euler_cassini(record_criterion):
    with Timer() as t:
        worst = sampled(10, _elliptic_cassini)
    finish(record_criterion, "elliptic Euler-Cassini, 10 samples seed 0", worst <= 1e-9, 30, t, f"max={worst:.2e}")


def test_scaling_transform(record_criterion):
    la = LevelAssignment(P=lambda l: Fraction(l + 2, 3), Q=lambda l: Fraction(-1, l + 5))
    with Timer() as t:
        ok = check_scaling_law(lambda l: Fraction(2 * l + 1, 7), la, n_max=8, level_max=4)
        ok = ok and check_scaling_law(lambda l: Fraction(-3, l + 2), la, n_max=8, level_max=4)
    finish(record_criterion, "scaling transform, n<=8, level<=4", ok, 1, t, "exact")
