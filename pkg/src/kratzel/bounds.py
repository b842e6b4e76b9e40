"""Gamma-function bounds for λ_ν^(n) and K_ν, and a point verifier.

Inequalities covered (all evaluated in log space where they involve e^(-x)):

* ``theorem_kernel_bound``: λ_ν^(n)(x) versus
  (2π)^((n-1)/2) √n/(n-1) (n/(n-1))^(ν-1/n) (x/n)^(nν)
  Γ(x/(n-1) + 1/n - ν)/Γ(x/(n-1) + 1) e^(-x).
  A lower bound for ν < 1/n, exact at ν = 1/n, an upper bound for ν > 1/n
  when x > (n-1)(ν - 1/n).
* ``theorem_bessel_bound``: the n = 2 case for K_ν,
  √(π/2) x^ν Γ(x + 1/2 - ν)/Γ(x + 1) e^(-x).
* ``corollary_envelope``: (x/(x + 1/2 - ν))^(ν+1/2) < √(2x/π) e^x K_ν(x) < 1.
* ``luke_envelope``: Luke's rational bounds on the same scaled quantity.
* ``k0_chain``: 1/√(x+1/2) < Γ(x+1/2)/Γ(x+1) < √(2/π) e^x K_0(x).
* ``gautschi_lower``: Γ(x+a)/Γ(x+1) > (x+a)^(a-1), 0 < a < 1.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError
from .kernel import log_bessel_k, log_kratzel_kernel
from .quad import QuadConfig
from .specfun import ln_gamma_ratio

__all__ = [
    "TOL_EQ",
    "Direction",
    "BoundDirection",
    "BoundReport",
    "log_theorem_kernel_bound",
    "theorem_kernel_bound",
    "log_theorem_bessel_bound",
    "theorem_bessel_bound",
    "bound_direction",
    "corollary_envelope",
    "luke_envelope",
    "luke_bessel_lower",
    "k0_chain",
    "gautschi_lower",
    "verify_point",
    "find_crossover",
    "loglog_slope",
]

TOL_EQ = 1e-9
# floor on the relative error of closed-form (gamma-only) bound evaluations
_CLOSED_FORM_REL = 1e-13
_LN_2PI = math.log(2.0 * math.pi)


class Direction(enum.Enum):
    STRICT_LOWER = "strict_lower"
    EQUALITY = "equality"
    STRICT_UPPER = "strict_upper"


@dataclass(frozen=True)
class BoundDirection:
    kind: Direction
    valid_x_min: float = 0.0

    def admits(self, x):
        return self.kind is not Direction.STRICT_UPPER or x > self.valid_x_min


def _check_x(x):
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"x must be positive, got {x!r}")
    return x


def _check_n(n):
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"n must be an integer, got {n!r}")
    n = int(n)
    if n < 2:
        raise DomainError(f"the kernel gamma bound needs n >= 2, got {n}")
    return n


def _check_nu(nu):
    nu = float(nu)
    if not (math.isfinite(nu) and nu >= 0.0):
        raise DomainError(f"nu must be non-negative, got {nu!r}")
    return nu


def bound_direction(n, nu, tol_eq=TOL_EQ):
    """Classify the kernel bound at (n, ν); for K_ν use n = 2."""
    n = _check_n(n)
    nu = _check_nu(nu)
    threshold = 1.0 / n
    if nu < threshold - tol_eq:
        return BoundDirection(Direction.STRICT_LOWER, 0.0)
    if nu <= threshold + tol_eq:
        return BoundDirection(Direction.EQUALITY, 0.0)
    return BoundDirection(Direction.STRICT_UPPER, (n - 1) * (nu - threshold))


def log_theorem_kernel_bound(n, nu, x):
    n = _check_n(n)
    nu = _check_nu(nu)
    x = _check_x(x)
    shift = nu - 1.0 / n
    if shift > 0.0 and not x > (n - 1) * shift:
        raise DomainError(
            f"x must exceed (n-1)(nu-1/n) = {(n - 1) * shift:.6g} when nu > 1/n, got {x!r}"
        )
    return (
        0.5 * (n - 1) * _LN_2PI
        + 0.5 * math.log(n)
        - math.log(n - 1)
        + shift * math.log(n / (n - 1))
        + n * nu * math.log(x / n)
        + ln_gamma_ratio(x / (n - 1), -shift)
        - x
    )


def theorem_kernel_bound(n, nu, x):
    """Gamma-ratio bound on λ_ν^(n)(x); n >= 2, ν >= 0.

    Raises:
        DomainError: n < 2, ν < 0, or ν > 1/n with x <= (n-1)(ν-1/n).
    """
    return math.exp(log_theorem_kernel_bound(n, nu, x))


def log_theorem_bessel_bound(nu, x):
    nu = _check_nu(nu)
    x = _check_x(x)
    if nu > 0.5 and not x > nu - 0.5:
        raise DomainError(f"x must exceed nu - 1/2 = {nu - 0.5:.6g} when nu > 1/2, got {x!r}")
    return 0.5 * math.log(0.5 * math.pi) + nu * math.log(x) + ln_gamma_ratio(x, 0.5 - nu) - x


def theorem_bessel_bound(nu, x):
    """√(π/2) x^ν Γ(x + 1/2 - ν)/Γ(x + 1) e^(-x), the gamma bound on K_ν(x)."""
    return math.exp(log_theorem_bessel_bound(nu, x))


def _check_envelope_nu(nu):
    nu = float(nu)
    if not (math.isfinite(nu) and 0.0 <= nu < 0.5):
        raise DomainError(f"nu must lie in [0, 1/2), got {nu!r}")
    return nu


def corollary_envelope(nu, x):
    """(lower, upper) bracketing √(2x/π) e^x K_ν(x) for 0 <= ν < 1/2."""
    nu = _check_envelope_nu(nu)
    x = _check_x(x)
    lower = math.exp((nu + 0.5) * -math.log1p((0.5 - nu) / x))
    return lower, 1.0


def luke_envelope(nu, x):
    """Luke's (lower, upper) for √(2x/π) e^x K_ν(x), 0 <= ν < 1/2."""
    nu = _check_envelope_nu(nu)
    x = _check_x(x)
    c = 0.5 * (0.25 - nu * nu)
    lower = 1.0 - c / (x + c)
    upper = 1.0 - c / (x + 0.25 * (2.25 - nu * nu))
    return lower, upper


def luke_bessel_lower(nu, x):
    """Luke's lower bound turned into a bound on K_ν(x) itself."""
    lower, _ = luke_envelope(nu, x)
    return math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) * lower


def k0_chain(x, cfg=None):
    """(1/√(x+1/2), Γ(x+1/2)/Γ(x+1), √(2/π) e^x K_0(x)); increasing for x > 0."""
    x = _check_x(x)
    log_k, _, _ = log_bessel_k(0.0, x, cfg)
    a = 1.0 / math.sqrt(x + 0.5)
    b = math.exp(ln_gamma_ratio(x, 0.5))
    c = math.exp(0.5 * math.log(2.0 / math.pi) + x + log_k)
    return a, b, c


def gautschi_lower(x, a):
    """(x + a)^(a - 1), which Γ(x + a)/Γ(x + 1) strictly exceeds for 0 < a < 1."""
    x = _check_x(x)
    a = float(a)
    if not 0.0 < a < 1.0:
        raise DomainError(f"a must lie in (0, 1), got {a!r}")
    return (x + a) ** (a - 1.0)


@dataclass(frozen=True)
class BoundReport:
    """One checked inequality at one parameter point.

    ``margin`` is signed and relative: positive means the inequality holds
    with that much slack.  For equality cases it is -|exact - bound|/|exact|.
    ``err`` is the relative numerical uncertainty of ``exact``; a strict
    inequality whose margin does not clear it is ``indeterminate``.
    """

    which: str
    n: int
    nu: float
    x: float
    exact: float
    bound: float
    direction: Direction
    margin: float
    err: float
    status: str

    @property
    def satisfied(self):
        return self.status == "satisfied"


def _classify(direction, margin, err, tol_eq):
    if direction is Direction.EQUALITY:
        if -margin <= tol_eq:
            return "satisfied"
        return "indeterminate" if -margin <= err else "failed"
    if margin > err:
        return "satisfied"
    if margin < -err:
        return "failed"
    return "indeterminate"


def make_report(which, n, nu, x, log_exact, log_bound, direction, err, tol_eq):
    # relative margins from log values: 1 - bound/exact = -expm1(log_bound - log_exact)
    if direction is Direction.STRICT_LOWER:
        margin = -math.expm1(log_bound - log_exact)
    elif direction is Direction.STRICT_UPPER:
        margin = math.expm1(log_bound - log_exact)
    else:
        margin = -abs(math.expm1(log_bound - log_exact))
    err = err + _CLOSED_FORM_REL
    return BoundReport(
        which=which,
        n=n,
        nu=nu,
        x=x,
        exact=math.exp(log_exact),
        bound=math.exp(log_bound),
        direction=direction,
        margin=margin,
        err=err,
        status=_classify(direction, margin, err, tol_eq),
    )


def _indeterminate(which, n, nu, x, exc, direction):
    return BoundReport(
        which=which,
        n=n,
        nu=nu,
        x=x,
        exact=float(getattr(exc, "value", math.nan)),
        bound=math.nan,
        direction=direction,
        margin=math.nan,
        err=math.inf,
        status="indeterminate",
    )


def verify_point(n, nu, x, cfg=None, tol_eq=TOL_EQ):
    """Check every inequality whose domain contains (n, ν, x).

    The kernel bound is checked for any n >= 2.  The K_ν family (gamma bound,
    envelopes, K_0 chain, Gautschi step) is tied to n = 2.  Inequalities whose
    domain excludes the point are skipped.  A quadrature failure yields an
    ``indeterminate`` report, never a satisfied one.
    """
    n = _check_n(n)
    nu = _check_nu(nu)
    x = _check_x(x)
    cfg = cfg or QuadConfig()
    reports = []

    direction = bound_direction(n, nu, tol_eq)
    if direction.admits(x):
        try:
            log_exact, rel, _ = log_kratzel_kernel(n, nu, x, cfg)
        except AccuracyError as exc:
            reports.append(_indeterminate("kernel_gamma_bound", n, nu, x, exc, direction.kind))
        else:
            log_bound = log_theorem_kernel_bound(n, nu, x)
            reports.append(
                make_report("kernel_gamma_bound", n, nu, x, log_exact, log_bound, direction.kind, rel, tol_eq)
            )

    if n != 2:
        return reports

    need_k = direction.admits(x) or nu < 0.5
    if not need_k:
        return reports
    try:
        log_k, rel_k, _ = log_bessel_k(nu, x, cfg)
    except AccuracyError as exc:
        reports.append(_indeterminate("bessel_gamma_bound", n, nu, x, exc, direction.kind))
        return reports

    if direction.admits(x):
        reports.append(
            make_report(
                "bessel_gamma_bound", n, nu, x, log_k, log_theorem_bessel_bound(nu, x),
                direction.kind, rel_k, tol_eq,
            )
        )
    if nu < 0.5:
        # √(2x/π) e^x K_ν(x)
        log_scaled = 0.5 * math.log(2.0 * x / math.pi) + x + log_k
        for name, (lo, up) in (("envelope", corollary_envelope(nu, x)), ("luke", luke_envelope(nu, x))):
            reports.append(
                make_report(f"{name}_lower", n, nu, x, log_scaled, math.log(lo), Direction.STRICT_LOWER, rel_k, tol_eq)
            )
            reports.append(
                make_report(f"{name}_upper", n, nu, x, log_scaled, math.log(up), Direction.STRICT_UPPER, rel_k, tol_eq)
            )
        a = 0.5 - nu
        log_ratio = ln_gamma_ratio(x, a)
        reports.append(
            make_report(
                "gautschi", n, nu, x, log_ratio, math.log(gautschi_lower(x, a)),
                Direction.STRICT_LOWER, 0.0, tol_eq,
            )
        )
    if nu == 0.0:
        log_c = 0.5 * math.log(2.0 / math.pi) + x + log_k
        log_b = ln_gamma_ratio(x, 0.5)
        log_a = -0.5 * math.log(x + 0.5)
        reports.append(make_report("k0_chain_ab", n, nu, x, log_b, log_a, Direction.STRICT_LOWER, 0.0, tol_eq))
        reports.append(make_report("k0_chain_bc", n, nu, x, log_c, log_b, Direction.STRICT_LOWER, rel_k, tol_eq))
    return reports


def loglog_slope(func, x_values):
    """Least-squares slope of ln func(x) against ln x."""
    x = np.asarray(x_values, dtype=float)
    y = np.array([math.log(func(v)) for v in x])
    slope, _ = np.polyfit(np.log(x), y, 1)
    return float(slope)


def find_crossover(nu, x_min=1e-3, x_max=1e2, count=200):
    """Locate x* where the gamma bound on K_ν and Luke's lower bound cross.

    Returns the first sign change of ln(gamma bound) - ln(Luke bound) on a
    log grid, refined by bisection in ln x, or ``None`` if there is none.
    """
    def diff(x):
        return log_theorem_bessel_bound(nu, x) - math.log(luke_bessel_lower(nu, x))

    grid = np.geomspace(x_min, x_max, count)
    values = [diff(x) for x in grid]
    for (x0, d0), (x1, d1) in zip(zip(grid, values), zip(grid[1:], values[1:])):
        if d0 == 0.0:
            return float(x0)
        if (d0 > 0.0) != (d1 > 0.0):
            lo, hi = math.log(x0), math.log(x1)
            for _ in range(100):
                mid = 0.5 * (lo + hi)
                if (diff(math.exp(mid)) > 0.0) == (d0 > 0.0):
                    lo = mid
                else:
                    hi = mid
                if hi - lo < 1e-15:
                    break
            return math.exp(0.5 * (lo + hi))
    return None
