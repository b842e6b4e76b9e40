"""Krätzel kernel, modified Bessel K_ν, the Krätzel transform, and gamma-ratio bounds."""

from .bounds import (
    BoundDirection,
    BoundReport,
    Direction,
    bound_direction,
    corollary_envelope,
    find_crossover,
    gautschi_lower,
    k0_chain,
    luke_envelope,
    theorem_bessel_bound,
    theorem_kernel_bound,
    verify_point,
)
from .errors import AccuracyError, DomainError
from .kernel import (
    BesselArg,
    KernelParams,
    bessel_from_kernel,
    bessel_k,
    kernel_from_bessel,
    kratzel_kernel,
)
from .quad import EvalResult, QuadConfig, integrate, integrate_exp_tail
from .specfun import beta, gamma, gamma_ratio, ln_gamma
from .transform import ExpDecay, PowerExp, Sampled, kratzel_transform, transform_grid

__version__ = "0.1.0"
