import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kratzel.bounds import (
    TOL_EQ,
    Direction,
    bound_direction,
    corollary_envelope,
    find_crossover,
    gautschi_lower,
    k0_chain,
    log_theorem_bessel_bound,
    loglog_slope,
    luke_bessel_lower,
    luke_envelope,
    theorem_bessel_bound,
    theorem_kernel_bound,
    verify_point,
)
from kratzel.errors import DomainError
from kratzel.kernel import bessel_k, kratzel_kernel
from kratzel.specfun import gamma, gamma_ratio

from oracle_values import K0_1, K0_HALF, KERNEL_3_0_1

SQRT_2PI = math.sqrt(2 * math.pi)


def test_kernel_bound_equality_case():
    assert theorem_kernel_bound(2, 0.5, 1.0) == pytest.approx(kratzel_kernel(2, 0.5, 1.0).value, rel=1e-12)
    assert theorem_kernel_bound(2, 0.5, 1.0) == pytest.approx(0.6520493, rel=1e-7)


def test_kernel_bound_n2_nu0():
    expected = SQRT_2PI * math.gamma(1.5) / math.gamma(2.0) / math.e
    assert expected == pytest.approx(0.8172226, rel=1e-6)
    assert theorem_kernel_bound(2, 0.0, 1.0) == pytest.approx(expected, rel=1e-13)
    assert theorem_kernel_bound(2, 0.0, 1.0) < 2 * K0_1


def test_kernel_bound_n3_nu0_below_oracle():
    # (2π) (√3/2) (3/2)^(-1/3) Γ(5/6)/Γ(3/2) e^-1
    expected = 2 * math.pi * math.sqrt(3) / 2 * 1.5 ** (-1 / 3) * gamma(5 / 6) / gamma(1.5) / math.e
    assert theorem_kernel_bound(3, 0.0, 1.0) == pytest.approx(expected, rel=1e-13)
    assert theorem_kernel_bound(3, 0.0, 1.0) <= KERNEL_3_0_1


def test_kernel_bound_domain():
    with pytest.raises(DomainError):
        theorem_kernel_bound(1, 0.5, 1.0)
    with pytest.raises(DomainError):
        theorem_kernel_bound(3, 1.0, 4.0 / 3.0)  # exactly at (n-1)(ν-1/n)
    with pytest.raises(DomainError):
        theorem_kernel_bound(2, -0.1, 1.0)
    assert theorem_kernel_bound(3, 1.0, 4.0 / 3.0 + 1e-9) > 0


def test_bessel_bound_examples():
    assert theorem_bessel_bound(0.5, 1.0) == pytest.approx(math.sqrt(math.pi / 2) / math.e, rel=1e-14)
    expected = math.sqrt(math.pi / 2) * math.gamma(1.5) / math.gamma(2.0) / math.e
    assert theorem_bessel_bound(0.0, 1.0) == pytest.approx(expected, rel=1e-14)
    assert theorem_bessel_bound(0.0, 1.0) == pytest.approx(0.4086113, rel=1e-6)
    assert theorem_bessel_bound(0.0, 1.0) < K0_1
    with pytest.raises(DomainError):
        theorem_bessel_bound(1.5, 1.0)


@settings(max_examples=200)
@given(st.floats(0.0, 4.0), st.floats(1e-3, 200.0))
def test_bessel_and_kernel_bounds_consistent(nu, x):
    if nu > 0.5 and x <= nu - 0.5:
        return
    lhs = 2 * (x / 2) ** nu * theorem_bessel_bound(nu, x)
    assert lhs == pytest.approx(theorem_kernel_bound(2, nu, x), rel=1e-12)


@pytest.mark.parametrize(
    "n, nu, kind, x_min",
    [
        (2, 0.0, Direction.STRICT_LOWER, 0.0),
        (2, 0.5, Direction.EQUALITY, 0.0),
        (2, 1.5, Direction.STRICT_UPPER, 1.0),
        (3, 1 / 3, Direction.EQUALITY, 0.0),
        (5, 1.2, Direction.STRICT_UPPER, 4.0),
    ],
)
def test_bound_direction(n, nu, kind, x_min):
    d = bound_direction(n, nu)
    assert d.kind is kind
    assert d.valid_x_min == pytest.approx(x_min)


def test_corollary_envelope_examples():
    lo, up = corollary_envelope(0.0, 1.0)
    assert lo == pytest.approx(math.sqrt(2 / 3), rel=1e-14)
    assert up == 1.0
    mid = math.sqrt(2 / math.pi) * math.e * K0_1
    assert mid == pytest.approx(0.9131494, rel=1e-6)
    assert lo < mid < up

    lo, up = corollary_envelope(0.25, 10.0)
    assert lo == pytest.approx((10 / 10.25) ** 0.75, rel=1e-14)
    mid = math.sqrt(20 / math.pi) * math.exp(10) * bessel_k(0.25, 10.0).value
    assert lo < mid < up

    for x in (0.1, 1.0, 10.0):
        lo, _ = corollary_envelope(0.499, x)
        mid = math.sqrt(2 * x / math.pi) * math.exp(x) * bessel_k(0.499, x).value
        assert lo < mid < 1 and 1 - lo < 0.01 + 1e-3 / x


def test_luke_envelope_examples():
    lo, up = luke_envelope(0.0, 1.0)
    assert lo == pytest.approx(1 - 0.125 / 1.125, rel=1e-14)
    assert up == pytest.approx(0.92, rel=1e-14)
    mid = math.sqrt(2 / math.pi) * math.e * K0_1
    assert lo < mid < up

    lo, up = luke_envelope(0.4999999, 3.0)
    assert lo == pytest.approx(1.0, abs=1e-7) and up == pytest.approx(1.0, abs=1e-7)

    lo, up = luke_envelope(0.0, 100.0)
    assert lo == pytest.approx(1 - 0.125 / 100.125, rel=1e-14)
    mid = math.sqrt(200 / math.pi) * math.exp(100) * bessel_k(0.0, 100.0).value
    assert lo < mid < up


@pytest.mark.parametrize("fn", [corollary_envelope, luke_envelope])
def test_envelope_domain(fn):
    for nu in (-0.1, 0.5, 0.75):
        with pytest.raises(DomainError):
            fn(nu, 1.0)


def test_k0_chain_examples():
    a, b, c = k0_chain(1.0)
    assert a == pytest.approx(math.sqrt(2 / 3), rel=1e-14)
    assert b == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-14)
    assert c == pytest.approx(math.sqrt(2 / math.pi) * math.e * K0_1, rel=1e-10)
    assert a < b < c

    a, b, c = k0_chain(0.5)
    assert a == pytest.approx(1.0)
    assert b == pytest.approx(2 / math.sqrt(math.pi), rel=1e-14)
    assert c == pytest.approx(math.sqrt(2 / math.pi) * math.exp(0.5) * K0_HALF, rel=1e-10)
    assert a < b < c

    a, b, c = k0_chain(50.0)
    assert a < b < c
    assert c - a < 1e-2


def test_gautschi_examples():
    assert gautschi_lower(1.0, 0.5) == pytest.approx(1 / math.sqrt(1.5), rel=1e-14)
    assert gautschi_lower(1.0, 0.5) < gamma_ratio(1.0, 0.5)
    assert gautschi_lower(3.0, 0.999) == pytest.approx(1.0, rel=2e-3)
    assert gautschi_lower(3.0, 0.999) < gamma_ratio(3.0, 0.999)
    assert gamma_ratio(0.01, 0.25) - gautschi_lower(0.01, 0.25) > 0
    for a in (0.0, 1.0, -0.2):
        with pytest.raises(DomainError):
            gautschi_lower(1.0, a)


def _by_name(reports):
    return {r.which: r for r in reports}


def test_verify_point_all_satisfied():
    reports = _by_name(verify_point(2, 0.0, 1.0))
    assert {
        "kernel_gamma_bound", "bessel_gamma_bound", "envelope_lower", "envelope_upper",
        "luke_lower", "luke_upper", "gautschi", "k0_chain_ab", "k0_chain_bc",
    } == set(reports)
    assert all(r.satisfied for r in reports.values())
    assert reports["bessel_gamma_bound"].exact == pytest.approx(K0_1, rel=1e-10)


def test_verify_point_equality():
    reports = _by_name(verify_point(2, 0.5, 3.0))
    assert set(reports) == {"kernel_gamma_bound", "bessel_gamma_bound"}
    for r in reports.values():
        assert r.direction is Direction.EQUALITY
        assert abs(r.margin) <= TOL_EQ
        assert r.satisfied


def test_verify_point_domain_gating():
    assert verify_point(2, 1.5, 0.5) == []
    names = {r.which for r in verify_point(2, 1.5, 1.5)}
    assert names == {"kernel_gamma_bound", "bessel_gamma_bound"}


def test_verify_point_flags_a_wrong_bound(monkeypatch):
    import kratzel.bounds as bd

    monkeypatch.setattr(bd, "log_theorem_bessel_bound", lambda nu, x: math.log(10 * K0_1))
    r = _by_name(bd.verify_point(2, 0.0, 1.0))["bessel_gamma_bound"]
    assert r.status == "failed" and r.margin < 0


def test_verify_point_quadrature_failure_is_indeterminate():
    from kratzel.quad import QuadConfig

    cfg = QuadConfig(rel_tol=1e-15, max_refinements=1)
    reports = verify_point(3, 0.1, 2.0, cfg)
    assert reports and all(r.status == "indeterminate" for r in reports)


def test_small_x_slope():
    xs = np.geomspace(1e-4, 1e-2, 20)
    for nu in (0.1, 0.3):
        assert loglog_slope(lambda x: theorem_bessel_bound(nu, x), xs) == pytest.approx(nu, abs=0.02)
    # Luke's lower bound on K behaves like x^(1/2) once x is well below (1/4 - ν²)/2
    xs = np.geomspace(1e-8, 1e-6, 20)
    for nu in (0.1, 0.3):
        assert loglog_slope(lambda x: luke_bessel_lower(nu, x), xs) == pytest.approx(0.5, abs=0.02)


def test_crossover_exists_and_flips():
    xstar = find_crossover(0.25)
    assert xstar is not None and 1e-3 < xstar < 1e2
    below, above = xstar / 10, xstar * 10
    assert theorem_bessel_bound(0.25, below) > luke_bessel_lower(0.25, below)
    assert theorem_bessel_bound(0.25, above) < luke_bessel_lower(0.25, above)
    diff = log_theorem_bessel_bound(0.25, xstar) - math.log(luke_bessel_lower(0.25, xstar))
    assert abs(diff) < 1e-10
