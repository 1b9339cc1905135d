"""Modified Jacobi theta function and theta-shifted factorials.

All values are Python ``complex`` numbers.  The theta function is the
plain truncated product

    theta(z; p) = prod_{j >= 0} (1 - p^j z) (1 - p^(j+1) / z),   |p| < 1,

with the truncation index chosen from a geometric tail bound.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import DomainError, SingularValue

__all__ = [
    "ThetaConfig",
    "DEFAULT_CONFIG",
    "IdentityResiduals",
    "as_complex",
    "theta",
    "theta_product",
    "theta_quotient",
    "qp_factorial",
    "relative_residual",
    "identity_residuals",
]


@dataclass(frozen=True)
class ThetaConfig:
    truncation_eps: float = 1e-16
    zero_guard: float = 1e-12

    def __post_init__(self):
        if not 0 < self.truncation_eps < 1:
            raise DomainError(f"truncation_eps must lie in (0, 1), got {self.truncation_eps}")
        if not 0 < self.zero_guard < 1:
            raise DomainError(f"zero_guard must lie in (0, 1), got {self.zero_guard}")


DEFAULT_CONFIG = ThetaConfig()


def as_complex(value) -> complex:
    """Coerce ``value`` to a finite complex number."""
    z = complex(value)
    if not cmath.isfinite(z):
        raise DomainError(f"non-finite value {z!r}")
    return z


def _check_nome(p: complex) -> None:
    if abs(p) >= 1:
        raise DomainError(f"nome must satisfy |p| < 1, got |p| = {abs(p)}")


def _finite(value: complex, what: str) -> complex:
    if not cmath.isfinite(value):
        raise DomainError(f"{what} overflowed to a non-finite value")
    return value


def theta(z, p, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """Modified Jacobi theta function theta(z; p).

    The product runs over j < J where J is the smallest index with
    ``|p|^J * max(|z|, 1/|z|) < cfg.truncation_eps``.

    >>> theta(2, 0)
    (-1+0j)
    """
    z = as_complex(z)
    p = as_complex(p)
    if z == 0:
        raise DomainError("theta(z; p) is undefined at z = 0")
    _check_nome(p)

    r = abs(p)
    scale = max(abs(z), 1.0 / abs(z))
    eps = cfg.truncation_eps
    result = 1 + 0j
    pj = 1 + 0j  # p**j
    j = 0
    while not (r**j * scale < eps):
        result *= (1 - pj * z) * (1 - pj * p / z)
        pj *= p
        j += 1
    return _finite(result, "theta")


def theta_product(zs: Iterable, p, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """theta(z_1, ..., z_m; p), the product of the individual theta values."""
    result = 1 + 0j
    for z in zs:
        result *= theta(z, p, cfg)
    return _finite(result, "theta product")


def theta_quotient(numer: Iterable, denom: Iterable, p, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """theta(numer; p) / theta(denom; p), guarding each denominator factor.

    Raises SingularValue as soon as a denominator theta value falls below
    ``cfg.zero_guard`` in modulus.
    """
    den = 1 + 0j
    for z in denom:
        t = theta(z, p, cfg)
        if abs(t) < cfg.zero_guard:
            raise SingularValue(f"theta({complex(z)}; p) = {t} is below the zero guard")
        den *= t
    return _finite(theta_product(numer, p, cfg) / den, "theta quotient")


def qp_factorial(a, n: int, q, p, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """Theta-shifted factorial (a; q, p)_n for any integer n.

    For n > 0 this is prod_{j=0}^{n-1} theta(a q^j; p), for n = 0 it is 1,
    and for n < 0 it is 1 / prod_{j=0}^{-n-1} theta(a q^(n+j); p).
    """
    a = as_complex(a)
    q = as_complex(q)
    p = as_complex(p)
    _check_nome(p)
    n = int(n)
    if n == 0:
        return 1 + 0j
    if n > 0:
        return theta_product((a * q**j for j in range(n)), p, cfg)
    return theta_quotient((), (a * q ** (n + j) for j in range(-n)), p, cfg)


def relative_residual(lhs, rhs) -> float:
    """Symmetric relative residual |L - R| / (|L| + |R| + 1)."""
    lhs = complex(lhs)
    rhs = complex(rhs)
    return abs(lhs - rhs) / (abs(lhs) + abs(rhs) + 1.0)


class IdentityResiduals(NamedTuple):
    inversion: float
    quasi_periodicity: float
    addition: float


def identity_residuals(z, u, v, w, p, cfg: ThetaConfig = DEFAULT_CONFIG) -> IdentityResiduals:
    """Residuals of the inversion, quasi-periodicity and addition formulas.

    inversion:          theta(z) = -z theta(1/z)
    quasi-periodicity:  theta(p z) = -(1/z) theta(z)
    addition:           theta(uv, u/v, wz, w/z) - theta(uz, u/z, wv, w/v)
                            = (w/v) theta(vz, v/z, uw, u/w)
    """
    z, u, v, w, p = (as_complex(x) for x in (z, u, v, w, p))
    for name, val in (("z", z), ("u", u), ("v", v), ("w", w), ("p", p)):
        if val == 0:
            raise DomainError(f"{name} must be nonzero")
    _check_nome(p)

    th = lambda *args: theta_product(args, p, cfg)  # noqa: E731
    tz = theta(z, p, cfg)
    inversion = relative_residual(tz, -z * theta(1 / z, p, cfg))
    quasi = relative_residual(theta(p * z, p, cfg), -tz / z)
    lhs = th(u * v, u / v, w * z, w / z) - th(u * z, u / z, w * v, w / v)
    rhs = (w / v) * th(v * z, v / z, u * w, u / w)
    return IdentityResiduals(inversion, quasi, relative_residual(lhs, rhs))
