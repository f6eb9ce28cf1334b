"""Independent high-precision oracle for the expected values frozen into the
C++ tests. Uses mpmath at 40 digits and a plain bisection written here, not
the library code. Run: python3 tests/oracles/frozen_values.py
"""
from mpmath import mp, mpf, pi, sqrt, exp

mp.dps = 40
hbar = mpf("1.054571817e-34")
G = mpf("6.67430e-11")
kB = mpf("1.380649e-23")
amu = mpf("1.66053906660e-27")
DAY = 86400


def mass(a, rho):
    return mpf(4) / 3 * pi * a**3 * rho


def p_var(m, w, n=0, s=1):
    return hbar * m * w / 2 * (2 * n + 1) / s**2


def x_var(m, w, n=0, s=1):
    return hbar / (2 * m * w) * (2 * n + 1) * s**2


def self_energy(m, a, b):
    l = b / (2 * a)
    if l <= 1:
        return m * m * G / a * (2 * l**2 - mpf(3) / 2 * l**3 + l**5 / 5)
    return m * m * G / a * (mpf(6) / 5 - 1 / (2 * l))


def bisect(f, lo, hi, n=300):
    flo = f(lo)
    for _ in range(n):
        mid = (lo + hi) / 2
        if (f(mid) > 0) == (flo > 0):
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def t_d(a, rho, w):
    m = mass(a, rho)
    f = lambda t: hbar / self_energy(m, a, sqrt(x_var(m, w) + t * t * p_var(m, w) / m**2)) - t
    hi = mpf(1)
    while f(hi) > 0:
        hi *= 2
    return bisect(f, mpf("1e-6"), hi)


def crossover(m, w, T, sigma):
    g = lambda t: sqrt(2 * t / T) * (x_var(m, w) + t * t * p_var(m, w) / m**2) - sigma**2
    return bisect(g, mpf("1e-6"), T / 2)


if __name__ == "__main__":
    T = mpf(30 * DAY)
    a = mpf("200e-9")
    m2000 = mass(a, 2000)
    m9 = mpf("1e9") * amu
    print("mass 200nm/2200     ", mass(a, 2200))
    print("mass 1um/5000       ", mass(mpf("1e-6"), 5000))
    print("p_var0 1e9 amu      ", p_var(m9, mpf("1e5")))
    print("mass 200nm/2000     ", m2000)
    print("E_G lambda=2        ", self_energy(m2000, a, 4 * a))
    print("tau_G lambda=2      ", hbar / self_energy(m2000, a, 4 * a))
    ldp = G * m2000**2 / (2 * a**3 * hbar)
    lmin = sqrt(1 / (2 * T * 100)) * 3 * p_var(m2000, mpf("1e5")) / hbar**2
    print("lambda_dp           ", ldp)
    print("lambda_min          ", lmin)
    print("ratio_dp            ", ldp / lmin)
    x = a / mpf("1e-7")
    ff = 6 / x**4 * (1 - 2 / x**2 + (1 + 2 / x**2) * exp(-x * x))
    lcsl = mpf("2.2e-17") * (m2000 / amu) ** 2 / (2 * mpf("1e-14")) * ff
    print("form factor f(2)    ", ff)
    print("lambda_csl          ", lcsl)
    print("ratio_csl           ", lcsl / lmin)
    m2200 = mass(a, 2200)
    P = m2200 * hbar * G / (2 * a**3)
    print("heating W, K/s      ", P, P / kB)
    print("third term          ", 2 * mpf("1e10") * hbar**2 * 1000 / (3 * mpf("1.66e-18") ** 2))
    print("approx frac unc     ", sqrt(2 * mpf(100) / T))
    for w in (mpf("1e5"), 2 * pi * mpf("1e5")):
        print("crossover omega=%s" % mp.nstr(w, 8), crossover(m9, w, T, mpf("100e-9")))
    for aa, rho in (("1e-6", 5000), ("1e-6", 2000), ("200e-9", 2000), ("2e-6", 2000),
                    ("200e-9", 5000), ("2e-6", 5000)):
        print("t_d a=%s rho=%d" % (aa, rho), t_d(mpf(aa), rho, mpf("1e5")))
