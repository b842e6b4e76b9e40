"""Numerical Krätzel transform  L{f}(z) = ∫_0^∞ λ_ν^(n)(z t) f(t) dt  for real z > 0."""

import csv
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import AccuracyError, DomainError
from .kernel import KernelParams, log_kratzel_kernel
from .quad import EvalResult, QuadConfig, integrate, integrate_exp_tail

__all__ = [
    "ExpDecay",
    "PowerExp",
    "Sampled",
    "TransformRow",
    "kratzel_transform",
    "transform_grid",
    "read_sampled_csv",
]


@dataclass(frozen=True)
class ExpDecay:
    """f(t) = e^(-rate t)."""

    rate: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.rate) and self.rate >= 0.0):
            raise DomainError(f"decay rate must be non-negative, got {self.rate!r}")

    def __call__(self, t):
        return np.exp(-self.rate * np.asarray(t, dtype=float))

    def laplace(self, z):
        return 1.0 / (self.rate + z)


@dataclass(frozen=True)
class PowerExp:
    """f(t) = t^power e^(-rate t), power > -1."""

    power: float
    rate: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.power) and self.power > -1.0):
            raise DomainError(f"power must exceed -1, got {self.power!r}")
        if not (math.isfinite(self.rate) and self.rate >= 0.0):
            raise DomainError(f"decay rate must be non-negative, got {self.rate!r}")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return np.power(t, self.power) * np.exp(-self.rate * t)

    def laplace(self, z):
        return math.gamma(self.power + 1.0) / (self.rate + z) ** (self.power + 1.0)


@dataclass(frozen=True, eq=False)
class Sampled:
    """Piecewise-linear f through (nodes, values); zero outside [nodes[0], nodes[-1]]."""

    nodes: np.ndarray
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if nodes.ndim != 1 or nodes.shape != values.shape or nodes.size < 2:
            raise DomainError("nodes and values must be 1-d arrays of equal length >= 2")
        if not (np.all(np.isfinite(nodes)) and np.all(np.isfinite(values))):
            raise DomainError("nodes and values must be finite")
        if nodes[0] <= 0.0:
            raise DomainError("nodes must be positive")
        if np.any(np.diff(nodes) <= 0.0):
            raise DomainError("nodes must be strictly increasing")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)

    def __call__(self, t):
        return np.interp(np.asarray(t, dtype=float), self.nodes, self.values, left=0.0, right=0.0)

    def combine(self, other, a=1.0, b=1.0):
        """a*self + b*other for samples on identical nodes."""
        if not np.array_equal(self.nodes, other.nodes):
            raise DomainError("sampled functions must share nodes")
        return Sampled(self.nodes, a * self.values + b * other.values)


def read_sampled_csv(path):
    """Read a two-column (t, f) CSV with a header row.

    Raises:
        DomainError: malformed rows (message carries the line number) or
            nodes that are not strictly increasing.
    """
    nodes, values = [], []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise DomainError(f"{path}: empty file")
        for row in reader:
            line = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise DomainError(f"{path}: line {line}: expected 2 columns, got {len(row)}")
            try:
                t, v = float(row[0]), float(row[1])
            except ValueError:
                raise DomainError(f"{path}: line {line}: non-numeric value") from None
            if not (math.isfinite(t) and math.isfinite(v)):
                raise DomainError(f"{path}: line {line}: non-finite value")
            if nodes and t <= nodes[-1]:
                raise DomainError(f"{path}: line {line}: nodes must be strictly increasing")
            nodes.append(t)
            values.append(v)
    return Sampled(np.array(nodes), np.array(values))


def _kernel_exponent_at_zero(p):
    # λ(x) ~ x^(nν) as x -> 0 when ν < 0, bounded (or log-singular at ν = 0) otherwise
    return min(p.n * p.nu, 0.0)


def kratzel_transform(f, n, nu, z, cfg=None):
    """L{f}(z) by outer quadrature over t with memoised kernel evaluations.

    ``f`` is an ``ExpDecay``, ``PowerExp`` or ``Sampled`` instance.  The
    inner kernels run ten times tighter than ``cfg.rel_tol``; the returned
    error adds their worst relative error times the integral of |integrand|
    to the outer error.
    """
    p = KernelParams(n, nu)
    z = float(z)
    if not (math.isfinite(z) and z > 0.0):
        raise DomainError(f"z must be positive, got {z!r}")
    cfg = cfg or QuadConfig()
    inner_cfg = QuadConfig(
        rel_tol=cfg.rel_tol / 10.0, abs_tol=cfg.abs_tol, max_refinements=cfg.max_refinements
    )
    worst_rel = [0.0]
    inner_evals = [0]

    @lru_cache(maxsize=None)
    def kernel_at(x):
        if x <= 0.0:
            return 0.0
        log_value, rel, n_evals = log_kratzel_kernel(p.n, p.nu, x, inner_cfg)
        worst_rel[0] = max(worst_rel[0], rel)
        inner_evals[0] += n_evals
        return math.exp(log_value)

    def integrand(t):
        t = np.asarray(t, dtype=float)
        lam = np.array([kernel_at(float(v)) for v in (z * t).ravel()]).reshape(t.shape)
        return lam * f(t)

    if isinstance(f, Sampled):
        outer = integrate(integrand, f.nodes, cfg)
        abs_outer = integrate(lambda t: np.abs(integrand(t)), f.nodes, cfg).value
    elif isinstance(f, (ExpDecay, PowerExp)):
        alpha = _kernel_exponent_at_zero(p) + (f.power if isinstance(f, PowerExp) else 0.0)
        if not alpha > -1.0:
            raise AccuracyError("transform integrand is not integrable at t = 0")
        outer = integrate_exp_tail(integrand, z + f.rate, alpha, cfg)
        abs_outer = abs(outer.value)
    else:
        raise DomainError(f"unsupported function spec {type(f).__name__}")
    err = outer.err_estimate + worst_rel[0] * abs_outer
    return EvalResult(outer.value, err, outer.n_evals + inner_evals[0])


@dataclass(frozen=True)
class TransformRow:
    z: float
    value: float
    err_estimate: float
    error: str | None = None


def transform_grid(f, n, nu, z_values, cfg=None):
    """One row per z in input order; per-point failures are recorded, not raised."""
    zs = [float(z) for z in z_values]
    if any(b <= a for a, b in zip(zs, zs[1:])):
        raise DomainError("z values must be strictly increasing")
    KernelParams(n, nu)
    rows = []
    for z in zs:
        try:
            res = kratzel_transform(f, n, nu, z, cfg)
        except (DomainError, AccuracyError) as exc:
            rows.append(TransformRow(z, math.nan, math.nan, str(exc)))
        else:
            rows.append(TransformRow(z, res.value, res.err_estimate))
    return rows
