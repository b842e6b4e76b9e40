"""Regenerate the frozen constants in oracle_values.py (needs mpmath).

Run:  python tests/make_oracles.py
Every value comes from 40-digit mpmath quadrature of the defining integrals,
independent of the package.
"""

from mpmath import mp, mpf, quad, inf, exp, sqrt, pi, gamma, besselk

mp.dps = 40


def k_integral(nu, x):
    nu, x = mpf(nu), mpf(x)
    integral = quad(lambda t: exp(-x * t) * (t * t - 1) ** (nu - mpf(1) / 2), [1, 2, 10, inf])
    return sqrt(pi) * (x / 2) ** nu / gamma(nu + mpf(1) / 2) * integral


def kernel_integral(n, nu, x):
    n, nu, x = mpf(n), mpf(nu), mpf(x)
    integral = quad(lambda t: (t ** n - 1) ** (nu - 1 / n) * exp(-x * t), [1, 2, 10, inf])
    return (2 * pi) ** ((n - 1) / 2) * sqrt(n) * (x / n) ** (n * nu) / gamma(nu + 1 - 1 / n) * integral


if __name__ == "__main__":
    print("K0_1 =", mp.nstr(k_integral(0, 1), 30), " besselk:", mp.nstr(besselk(0, 1), 30))
    print("K0_HALF =", mp.nstr(k_integral(0, 0.5), 30))
    print("K0_50 =", mp.nstr(k_integral(0, 50), 30))
    print("K025_10 =", mp.nstr(k_integral(0.25, 10), 30))
    print("K0_100 =", mp.nstr(k_integral(0, 100), 30))
    print("KERNEL_3_0_1 =", mp.nstr(kernel_integral(3, 0, 1), 30))
    print("KERNEL_4_01_2 =", mp.nstr(kernel_integral(4, 0.1, 2), 30))
    print("KERNEL_5_22_10 =", mp.nstr(kernel_integral(5, 2.2, 10), 30))
    lam = lambda t: 2 * (t / 2) ** mpf(0.3) * besselk(0.3, t)
    # λ_(-0.3)^(2)(t) = 2 (t/2)^(-0.3) K_0.3(t); transform of e^-t at z = 1
    print("TRANSFORM_2_M03_EXP_1 =", mp.nstr(quad(lambda t: 2 * (t / 2) ** mpf(-0.3) * besselk(0.3, t) * exp(-t), [0, 1, 10, inf]), 30))
    print("TRANSFORM_2_0_EXP_1 =", mp.nstr(quad(lambda t: 2 * besselk(0, t) * exp(-t), [0, 1, 10, inf]), 30))
