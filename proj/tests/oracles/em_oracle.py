"""Arbitrary-precision (mpmath, 40 digits) evaluation of the EM model cases
frozen into tests/unit/test_em_models.cpp."""
from mpmath import mp, mpf, exp, sqrt

mp.dps = 40
KB = mpf("8.617333262e-5")


def black(a, n, ea, t, j):
    return a / j ** n * exp(ea / (KB * t))


def k1(a, n, ea, t, w, h):
    return a * (w * h) ** n * exp(ea / (KB * t))


def k2(tr, tf):
    return sqrt(1 / tr + 1 / tf)


def rms(a, n, ea, t, w, h, c, vdd, fmax, p, tr, tf):
    ratio = k1(a, n, ea, t, w, h) / k2(tr, tf)
    return (ratio ** 2 / (c ** 2 * vdd ** 2) / (fmax * p)) ** (n / 2)


if __name__ == "__main__":
    print("black", black(1, 2, mpf("0.9"), mpf("398.15"), mpf("1e10")))
    print("k1", k1(1, 2, mpf("0.9"), mpf("378.15"), mpf("1e-7"), mpf("1e-7")))
    print("k2", k2(mpf("1e-10"), mpf("1e-10")))
    full = dict(a=1, ea=mpf("0.9"), t=mpf("398.15"), w=mpf("1e-7"), h=mpf("1e-7"),
                c=mpf("1e-15"), vdd=mpf("0.9"), fmax=mpf("2.66e9"), p=mpf("0.3"),
                tr=mpf("2e-11"), tf=mpf("2e-11"))
    print("rms n=2", rms(n=mpf(2), **full))
    print("rms n=2.5", rms(n=mpf("2.5"), **full))
    print("density", mpf("1e-15") * mpf("0.9") / (mpf("1e-7") * mpf("1e-7")) * 1 * mpf("2.66e9"))
