"""Random parameter sampling for the numeric identity checks.

All numeric suites draw parameters here, so the genericity rule lives in
one place: a draw is rejected when any guarded theta denominator
vanishes numerically (``SingularValue``), up to ``MAX_RETRIES`` times.
"""

from __future__ import annotations

import cmath
import math
from typing import Callable, TypeVar

import numpy as np

from .elliptic import EllipticParams
from .errors import LucasEllipticaError, SingularValue

__all__ = [
    "MAX_RETRIES",
    "SamplingError",
    "trial_rng",
    "sample_modulus_phase",
    "sample_theta_point",
    "sample_params",
    "sample_generic",
]

MAX_RETRIES = 100

Q_MODULUS = (0.8, 1.25)
AB_MODULUS = (0.3, 3.0)
P_MIN = 0.05

T = TypeVar("T")


class SamplingError(LucasEllipticaError, RuntimeError):
    """No generic parameter point found within the retry cap."""


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent generator for one trial, derived from (seed, trial)."""
    return np.random.default_rng([seed, trial])


def sample_modulus_phase(rng: np.random.Generator, lo: float, hi: float) -> complex:
    """Complex number with log-uniform modulus in [lo, hi] and uniform phase."""
    r = math.exp(rng.uniform(math.log(lo), math.log(hi)))
    return cmath.rect(r, rng.uniform(-math.pi, math.pi))


def sample_theta_point(rng: np.random.Generator, p_max: float = 0.5) -> dict:
    """Arguments z, u, v, w and nome p for the theta identities."""
    point = {name: sample_modulus_phase(rng, *AB_MODULUS) for name in ("z", "u", "v", "w")}
    point["p"] = sample_modulus_phase(rng, P_MIN, p_max)
    return point


def sample_params(rng: np.random.Generator, p_max: float = 0.5) -> EllipticParams:
    """One draw of (a, b, q, p) from the verification domain."""
    if not 0 < p_max < 1:
        raise ValueError(f"p_max must lie in (0, 1), got {p_max}")
    a = sample_modulus_phase(rng, *AB_MODULUS)
    b = sample_modulus_phase(rng, *AB_MODULUS)
    q = sample_modulus_phase(rng, *Q_MODULUS)
    p = sample_modulus_phase(rng, min(P_MIN, p_max), p_max)
    return EllipticParams(a, b, q, p)


def sample_generic(
    rng: np.random.Generator,
    probe: Callable[[EllipticParams], T],
    p_max: float = 0.5,
) -> tuple[EllipticParams, T]:
    """Draw parameters until ``probe`` runs without hitting a singular denominator.

    Returns the accepted parameters together with the probe's result.
    """
    for _ in range(MAX_RETRIES):
        ep = sample_params(rng, p_max)
        try:
            return ep, probe(ep)
        except SingularValue:
            continue
    raise SamplingError(f"no generic parameter point after {MAX_RETRIES} draws")
