"""The Krätzel kernel λ_ν^(n)(x) and the Bessel function K_ν(x).

Both come from integrals of the form

    ∫_1^∞ (t^n - 1)^(ν - 1/n) e^(-xt) dt = e^(-x) ∫_0^∞ ((1+r)^n - 1)^α e^(-xr) dr,

with α = ν - 1/n.  The shifted integral is handed to ``integrate_exp_tail``
(decay rate x, origin exponent α); the e^(-x) factor and the power/gamma
prefactors are added in log space.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError
from .quad import EvalResult, QuadConfig, integrate_exp_tail
from .specfun import ln_gamma

__all__ = [
    "KernelParams",
    "BesselArg",
    "kratzel_kernel",
    "log_kratzel_kernel",
    "bessel_k",
    "log_bessel_k",
    "kernel_from_bessel",
    "bessel_from_kernel",
]

_LN_2PI = math.log(2.0 * math.pi)
_HALF_LN_PI = 0.5 * math.log(math.pi)
_HALF_TOL = 1e-14


@dataclass(frozen=True)
class KernelParams:
    """Index pair (n, ν) of λ_ν^(n); requires n >= 1 and ν > 1/n - 1."""

    n: int
    nu: float

    def __post_init__(self):
        n, nu = self.n, self.nu
        if isinstance(n, bool) or int(n) != n or n < 1:
            raise DomainError(f"n must be an integer >= 1, got {n!r}")
        object.__setattr__(self, "n", int(n))
        nu = float(nu)
        object.__setattr__(self, "nu", nu)
        if not math.isfinite(nu):
            raise DomainError(f"nu must be finite, got {nu!r}")
        if not nu > 1.0 / self.n - 1.0:
            raise DomainError(f"nu must exceed 1/n - 1 = {1.0 / self.n - 1.0:.6g}, got {nu!r}")

    @property
    def alpha(self):
        """Exponent of the integrand's algebraic singularity at t = 1."""
        return self.nu - 1.0 / self.n


@dataclass(frozen=True)
class BesselArg:
    nu: float
    x: float

    def __post_init__(self):
        nu, x = float(self.nu), float(self.x)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "x", x)
        if not (math.isfinite(nu) and nu >= 0.0):
            raise DomainError(f"nu must be non-negative, got {nu!r}")
        _check_x(x)


def _check_x(x, name="x"):
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"{name} must be positive, got {x!r}")
    return x


def _shifted_integrand(n, alpha, x):
    if alpha == 0.0:
        def f(r):
            return np.exp(-x * r)
        return f

    def f(r):
        with np.errstate(divide="ignore", under="ignore"):
            base = np.expm1(n * np.log1p(r))
            return np.exp(alpha * np.log(base) - x * r)

    return f


def _shifted_integral(n, alpha, x, cfg):
    """∫_0^∞ ((1+r)^n - 1)^α e^(-xr) dr."""
    f = _shifted_integrand(n, alpha, x)
    # α == 0 needs no substitution: the power map with p = 1 is the identity.
    return integrate_exp_tail(f, x, alpha if alpha != 0.0 else 0.0, cfg)


def log_kratzel_kernel(n, nu, x, cfg=None):
    """Return (ln λ_ν^(n)(x), relative error, integrand evaluations)."""
    p = KernelParams(n, nu)
    x = _check_x(x)
    res = _shifted_integral(p.n, p.alpha, x, cfg)
    if not res.value > 0.0:
        raise AccuracyError("kernel integral is not positive", value=res.value)
    log_value = (
        0.5 * (p.n - 1) * _LN_2PI
        + 0.5 * math.log(p.n)
        + p.n * p.nu * math.log(x / p.n)
        - ln_gamma(p.nu + 1.0 - 1.0 / p.n)
        - x
        + math.log(res.value)
    )
    return log_value, res.rel_err, res.n_evals


def kratzel_kernel(n, nu, x, cfg=None):
    """λ_ν^(n)(x) by quadrature of its integral over (1, ∞).

    >>> round(kratzel_kernel(1, 0.5, 2.0).value, 10)
    0.1353352832
    """
    log_value, rel, n_evals = log_kratzel_kernel(n, nu, x, cfg)
    value = math.exp(log_value)
    return EvalResult(value, rel * value, n_evals)


def log_bessel_k(nu, x, cfg=None):
    """Return (ln K_ν(x), relative error, integrand evaluations).

    ν = 1/2 (to within 1e-14) uses the closed form √(π/(2x)) e^(-x).
    """
    a = BesselArg(nu, x)
    nu, x = a.nu, a.x
    if abs(nu - 0.5) <= _HALF_TOL:
        return 0.5 * math.log(math.pi / (2.0 * x)) - x, 0.0, 1
    res = _shifted_integral(2, nu - 0.5, x, cfg)
    if not res.value > 0.0:
        raise AccuracyError("Bessel integral is not positive", value=res.value)
    log_value = _HALF_LN_PI + nu * math.log(0.5 * x) - ln_gamma(nu + 0.5) - x + math.log(res.value)
    return log_value, res.rel_err, res.n_evals


def bessel_k(nu, x, cfg=None):
    """Modified Bessel function of the second kind K_ν(x), ν >= 0, x > 0."""
    log_value, rel, n_evals = log_bessel_k(nu, x, cfg)
    value = math.exp(log_value)
    return EvalResult(value, rel * value, n_evals)


def _check_relation_args(nu, x, value, name):
    nu = float(nu)
    if not (math.isfinite(nu) and nu >= 0.0):
        raise DomainError(f"nu must be non-negative, got {nu!r}")
    x = _check_x(x)
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise DomainError(f"{name} must be positive, got {value!r}")
    return nu, x, value


def kernel_from_bessel(nu, x, k_value):
    """λ_ν^(2)(x) = 2 (x/2)^ν K_ν(x)."""
    nu, x, k_value = _check_relation_args(nu, x, k_value, "k_value")
    return 2.0 * (0.5 * x) ** nu * k_value


def bessel_from_kernel(nu, x, lambda_value):
    nu, x, lambda_value = _check_relation_args(nu, x, lambda_value, "lambda_value")
    return lambda_value / (2.0 * (0.5 * x) ** nu)
