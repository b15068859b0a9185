"""High-precision reference values frozen into the Rust test-suite.

Run with `python3 gen_values.py`; requires mpmath. Independent of the Rust code.
"""
from mpmath import mp, mpf, exp, log, sqrt, ceil, cosh

mp.dps = 60


def lam(a, b):
    return -a / (b - a)


def psi(a, b, u):
    l = lam(a, b)
    return -l * u + log(1 - l + l * exp(u))


def tau(a, b, mu):
    l = lam(a, b)
    return l / ((1 - l) * exp(-mu) + l)


def two_point_mgf(a, b, s):
    l = lam(a, b)
    return (1 - l) * exp(s * a) + l * exp(s * b)


a, b = mpf(-2), mpf(1)
print("psi((-2,1),3)        =", psi(a, b, 3))
print("psi((-1,1),2)        =", psi(mpf(-1), mpf(1), 2))
print("tau((-2,1),3)        =", tau(a, b, 3))
t3 = tau(a, b, 3)
print("psi2((-2,1),3)       =", t3 * (1 - t3))
print("mgf2pt((-2,1),1)     =", two_point_mgf(a, b, 1))
print("cosh(1)              =", cosh(1))
print("mixture c=.5 s=1     =", (two_point_mgf(a, b, 1) + 1) / 2)
print("one-sided imp t=5    =", exp(mpf(-25) / 14))
print("one-sided orig t=5   =", exp(mpf(-25) / mpf("14.5")))
print("two-sided t=5        =", exp(mpf(-25) / 14) + exp(mpf(-25) / mpf("12.5")))
print("invert_t one imp     =", sqrt(7 * 2 * log(20)))
print("n improved           =", 4 * log(20) / mpf("0.04"), ceil(4 * log(20) / mpf("0.04")))
print("n original           =", mpf("4.5") * log(20) / mpf("0.04"), ceil(mpf("4.5") * log(20) / mpf("0.04")))
print("iid imp              =", exp(-1), "orig", exp(mpf(-8) / 9))
print("exp(1.125)           =", exp(mpf("1.125")))
