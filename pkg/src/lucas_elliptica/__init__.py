"""Elliptic Lucas sequences and non-commutative Fibonacci polynomials.

Closed-form evaluators (theta functions, elliptic weights and binomial
coefficients) paired with independent exact or numeric oracles (lattice
paths, tilings, stepwise rewriting, function-coefficient algebra).
"""

from .elliptic import (
    EllipticParams,
    big_weight,
    elliptic_binom,
    elliptic_integer,
    q_binom,
    small_weight,
)
from .elliptic_algebra import EllipticAlgebra, check_elliptic_euler_cassini
from .errors import DomainError, EnvDomainError, LucasEllipticaError, SingularValue
from .lucas import (
    CommutingPoly,
    LevelAssignment,
    elliptic_PQ,
    lucas_classical,
    lucas_level_symbolic,
    scale_transform,
    verify_elliptic_solution,
)
from .normal import NormalPoly, dual_normal, mul_normal, normal_order
from .theta import ThetaConfig, identity_residuals, qp_factorial, theta
from .verify import RunConfig, VerificationReport, run_suite
from .weighted import (
    binomial_theorem_check,
    check_weighted_euler_cassini,
    fib_weighted,
    lattice_path_oracle,
    weighted_binom,
)
from .weights import WeightEnv, WeightExpr, big_weight_expr, dual_weight_map, evaluate
from .words import (
    Matrix2,
    WordPoly,
    C_power,
    check_euler_cassini,
    check_sum_formula,
    dual_substitution,
    fib_word,
    nc_det,
    tilings_oracle,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
