"""Reference eigenvalues for the disk-exterior problem by bisection.

The lowest eigenvalue in the exterior of a disk of radius R with Robin
parameter alpha < 0 is lambda = -k^2 where k is the unique root of

    f(k) = k*K1(k*R) + alpha*K0(k*R) = 0

inside the bracket (sqrt(max(0, alpha^2 + alpha/R)), |alpha|).  The root is
pinned here by plain bisection on mpmath's Bessel functions at 40 digits;
the production solver must reproduce these values independently.
"""

import mpmath as mp

mp.mp.dps = 40

PAIRS = [
    ("m1_r1", "-1", "1"),
    ("m2_r1", "-2", "1"),
    ("m025_r025", "-0.25", "0.25"),
    ("m4_r1", "-4", "1"),
    ("m16_r4", "-16", "4"),
    ("m1_r3", "-1", "3"),
]


def disk_root(alpha, R):
    alpha = mp.mpf(alpha)
    R = mp.mpf(R)

    def f(k):
        return k * mp.besselk(1, k * R) + alpha * mp.besselk(0, k * R)

    lo2 = alpha * alpha + alpha / R
    lo = mp.sqrt(lo2) if lo2 > 0 else mp.mpf("1e-30")
    hi = -alpha
    flo = f(lo)
    fhi = f(hi)
    assert flo < 0 < fhi, (flo, fhi)
    for _ in range(220):
        mid = (lo + hi) / 2
        if flo * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def compute():
    vals = {}
    for tag, alpha, R in PAIRS:
        k = disk_root(alpha, R)
        vals[f"disk_k_{tag}"] = k
        vals[f"disk_lambda_{tag}"] = -k * k
    return vals


if __name__ == "__main__":
    for name, v in compute().items():
        print(name, "=", mp.nstr(v, 25))
