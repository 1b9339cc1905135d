"""Identity suites over sampled parameters, with JSON / CSV / text reports.

Each suite yields check records.  Numeric checks carry a residual and pass
when it is at most ``eps_report``; exact checks carry ``exact: true`` and a
boolean outcome.  Trials run in order with sub-seeds derived from
``(seed, trial)``, so equal configurations give byte-identical reports.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import words
from .elliptic import (
    EllipticParams,
    elliptic_binom,
    elliptic_integer,
    q_binom,
    second_recurrence_residual,
    wbineq_residual,
)
from .elliptic_algebra import EllipticAlgebra, check_elliptic_euler_cassini, check_elliptic_sum_formula
from .lucas import LevelAssignment, check_classical_specializations, check_scaling_law, verify_elliptic_solution
from .normal import normal_order
from .sampling import Q_MODULUS, sample_generic, sample_modulus_phase, sample_theta_point, trial_rng
from .theta import identity_residuals, qp_factorial, relative_residual
from .weighted import (
    binomial_theorem_check,
    check_weighted_euler_cassini,
    check_weighted_sum_formula,
    fib_weighted,
    lattice_path_oracle,
    weighted_binom,
)
from .weights import WeightEnv, WeightExpr, dual_weight_map, evaluate

__all__ = [
    "SUITES",
    "ConfigError",
    "RunConfig",
    "CheckRecord",
    "VerificationReport",
    "run_suite",
]

FORMATS = ("json", "csv", "text")


class ConfigError(ValueError):
    """Invalid run configuration."""


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    trials: int = 20
    eps_report: float = 1e-9
    p_max: float = 0.5
    output_format: str = "json"

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.trials < 1:
            raise ConfigError(f"trials must be at least 1, got {self.trials}")
        if not self.eps_report > 0:
            raise ConfigError(f"eps_report must be positive, got {self.eps_report}")
        if not 0 < self.p_max < 1:
            raise ConfigError(f"p_max must lie in (0, 1), got {self.p_max}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"output format must be one of {FORMATS}, got {self.output_format!r}")


@dataclass
class CheckRecord:
    id: str
    params: dict
    residual: float | None = None  # None for exact checks
    passed: bool = False

    @property
    def exact(self) -> bool:
        return self.residual is None

    def to_dict(self) -> dict:
        out: dict = {"id": self.id, "params": {k: _jsonable(v) for k, v in self.params.items()}}
        if self.exact:
            out["exact"] = True
        else:
            out["residual"] = self.residual
        out["pass"] = self.passed
        return out


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return list(value)
    return value


@dataclass
class VerificationReport:
    suite: str
    seed: int
    trials: int
    checks: list = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks if not c.exact), default=0.0)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "checks": [c.to_dict() for c in self.checks],
            "max_residual": self.max_residual,
            "pass": self.passed,
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_dict(), indent=2)
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["suite", "id", "residual", "pass"])
            for c in self.checks:
                writer.writerow([self.suite, c.id, "exact" if c.exact else repr(c.residual), str(c.passed).lower()])
            return buf.getvalue().rstrip("\n")
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            value = "exact" if c.exact else f"{c.residual:.3e}"
            params = " ".join(f"{k}={_text_value(v)}" for k, v in c.params.items())
            lines.append(f"{status} {c.id} {value} {params}".rstrip())
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"{verdict} suite={self.suite} seed={self.seed} trials={self.trials} max_residual={self.max_residual:.3e}")
        return "\n".join(lines)


def _text_value(v) -> str:
    if isinstance(v, complex):
        return f"{v.real:.6g}{v.imag:+.6g}i"
    return str(v)


# --- suites -----------------------------------------------------------------

Checks = Iterator[CheckRecord]


def _exact(id_: str, ok: bool, **params) -> CheckRecord:
    return CheckRecord(id_, params, None, bool(ok))


def _numeric(id_: str, residual: float, eps: float, params: dict) -> CheckRecord:
    return CheckRecord(id_, params, float(residual), residual <= eps)


def _sampled(cfg: RunConfig, probes: dict[str, Callable[[EllipticParams], float]]) -> Checks:
    """One record per (trial, probe); each trial draws one generic parameter point."""
    for trial in range(cfg.trials):
        rng = trial_rng(cfg.seed, trial)
        ep, results = sample_generic(rng, lambda ep: {name: fn(ep) for name, fn in probes.items()}, cfg.p_max)
        for name, residual in results.items():
            yield _numeric(name, residual, cfg.eps_report, ep.as_dict())


def theta_suite(cfg: RunConfig) -> Checks:
    for trial in range(cfg.trials):
        rng = trial_rng(cfg.seed, trial)
        point = sample_theta_point(rng, cfg.p_max)
        res = identity_residuals(**point)
        for name in res._fields:
            yield _numeric(f"theta.{name}", getattr(res, name), cfg.eps_report, point)
        z, p = point["z"], point["p"]
        q = sample_modulus_phase(rng, *Q_MODULUS)
        worst = max(
            relative_residual(qp_factorial(z, n, q, p) * qp_factorial(z * q**n, m, q, p), qp_factorial(z, n + m, q, p))
            for n in range(-3, 4)
            for m in range(-3, 4)
        )
        yield _numeric("theta.factorial_composition", worst, cfg.eps_report, {"a": z, "q": q, "p": p})


def _binom_recurrences(ep: EllipticParams) -> float:
    return max(wbineq_residual(n, k, ep) for n in range(9) for k in range(n + 1))


def _binom_second(ep: EllipticParams) -> float:
    return max(second_recurrence_residual(n, k, ep) for n in range(9) for k in range(n + 1))


def _binom_symbolic(ep: EllipticParams) -> float:
    env = WeightEnv.elliptic(ep)
    return max(
        relative_residual(evaluate(weighted_binom(n, k), env), elliptic_binom(n, k, ep))
        for n in range(9)
        for k in range(n + 1)
    )


def elliptic_binom_suite(cfg: RunConfig) -> Checks:
    yield from _sampled(
        cfg,
        {
            "ellbin.pascal_recursion": _binom_recurrences,
            "ellbin.second_recurrence": _binom_second,
            "ellbin.weighted_evaluation": _binom_symbolic,
        },
    )


def _elliptic_integers(ep: EllipticParams) -> float:
    return max(
        relative_residual(elliptic_integer(n, l, ep), elliptic_binom(n, n - 1, ep.shifted(l, 2 * l)))
        for n in range(1, 13)
        for l in range(9)
    )


def lucas_suite(cfg: RunConfig) -> Checks:
    yield from _sampled(
        cfg,
        {
            "lucas.elliptic_solution": lambda ep: verify_elliptic_solution(12, 8, ep),
            "lucas.elliptic_integers": _elliptic_integers,
        },
    )
    for name, ok in check_classical_specializations(15).items():
        yield _exact(f"lucas.classical.{name}", ok, n_max=15)
    la = LevelAssignment(P=lambda l: Fraction(l + 2, 3), Q=lambda l: Fraction(-1, l + 5))
    ok = check_scaling_law(lambda l: Fraction(2 * l + 1, 7), la, 8, 4)
    yield _exact("lucas.scaling_law", ok, n_max=8, level_max=4)


def word_suite(cfg: RunConfig) -> Checks:
    yield _exact(
        "word.tilings_oracle", all(words.tilings_oracle(n) == words.fib_word(n) for n in range(13)), n=(0, 12)
    )
    yield _exact(
        "word.left_recurrence", all(words.fib_word_left(n) == words.fib_word(n) for n in range(-8, 13)), n=(-8, 12)
    )
    yield _exact(
        "word.matrix_law", all(words.C_power(n) == words.C_power_pattern(n) for n in range(-6, 11)), n=(-6, 10)
    )
    sgn_ok = all(words.nc_det(words.C_power(n)) == words.sign(n) for n in range(-6, 11))
    yield _exact("word.determinant", sgn_ok, n=(-6, 10))
    yield _exact(
        "word.sum_formula",
        all(words.check_sum_formula(m, n) for m in range(-5, 6) for n in range(-5, 6)),
        m=(-5, 5),
        n=(-5, 5),
    )
    yield _exact(
        "word.euler_cassini",
        all(words.check_euler_cassini(n, k) for n in range(-4, 7) for k in range(-3, 4)),
        n=(-4, 6),
        k=(-3, 3),
    )


def weighted_suite(cfg: RunConfig) -> Checks:
    yield _exact(
        "weighted.lattice_paths",
        all(lattice_path_oracle(n, k) == weighted_binom(n, k) for n in range(9) for k in range(n + 1)),
        n=(0, 8),
    )
    yield _exact("weighted.binomial_theorem", all(binomial_theorem_check(n) for n in range(9)), n=(0, 8))
    yield _exact(
        "weighted.normal_form",
        all(normal_order(words.fib_word(n)) == fib_weighted(n) for n in range(-6, 11)),
        n=(-6, 10),
    )
    yield _exact(
        "weighted.sum_formula",
        all(check_weighted_sum_formula(m, n) for m in range(-4, 5) for n in range(-4, 5)),
        m=(-4, 4),
        n=(-4, 4),
    )
    yield _exact(
        "weighted.euler_cassini",
        all(check_weighted_euler_cassini(n, k) for n in range(-4, 7) for k in range(-2, 3)),
        n=(-4, 6),
        k=(-2, 2),
    )
    q = Fraction(2, 3)
    env = WeightEnv.q_mode(q)
    yield _exact(
        "weighted.q_degeneration",
        all(evaluate(weighted_binom(n, k), env) == q_binom(n, k, q) for n in range(11) for k in range(n + 1)),
        q=q,
        n=(0, 10),
    )
    symbols = [WeightExpr.symbol(s, t) for s in range(-4, 5) for t in range(1, 5)]
    yield _exact(
        "weighted.dual_involution", all(dual_weight_map(dual_weight_map(e)) == e for e in symbols), s=(-4, 4), t=(1, 4)
    )


def _cassini_all(ep: EllipticParams) -> float:
    return max(check_elliptic_euler_cassini(n, k, ep) for n in range(-3, 6) for k in range(-2, 3))


def _sum_all(ep: EllipticParams) -> float:
    return max(check_elliptic_sum_formula(m, n, ep) for m in range(-3, 4) for n in range(-3, 4))


def _expansion(ep: EllipticParams) -> float:
    """Symbolic normal form under the elliptic environment vs the function-coefficient algebra."""
    env = WeightEnv.elliptic(ep)
    alg = EllipticAlgebra(ep.q, ep.p)
    worst = 0.0
    for n in range(-6, 9):
        lhs = fib_weighted(n, env)
        rhs = alg.fib(n).evaluate(ep.a, ep.b)
        for key in set(lhs) | set(rhs):
            worst = max(worst, relative_residual(lhs.get(key, 0j), rhs.get(key, 0j)))
    return worst


def elliptic_cassini_suite(cfg: RunConfig) -> Checks:
    yield from _sampled(
        cfg,
        {
            "elliptic.euler_cassini": _cassini_all,
            "elliptic.sum_formula": _sum_all,
            "elliptic.fib_expansion": _expansion,
        },
    )


SUITES: dict[str, Callable[[RunConfig], Checks]] = {
    "theta": theta_suite,
    "elliptic-binom": elliptic_binom_suite,
    "lucas": lucas_suite,
    "word-identities": word_suite,
    "weighted-identities": weighted_suite,
    "elliptic-cassini": elliptic_cassini_suite,
}


def run_suite(name: str, cfg: RunConfig | None = None) -> VerificationReport:
    """Run one suite (or ``all``) and collect its records in order."""
    cfg = cfg or RunConfig()
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ConfigError(f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}")
    report = VerificationReport(name, cfg.seed, cfg.trials)
    for suite in names:
        report.checks.extend(SUITES[suite](cfg))
    return report
