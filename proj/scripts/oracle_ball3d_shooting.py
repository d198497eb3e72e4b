"""Radial shooting oracle for the ball-exterior problem in 3D.

Ratifies the closed form lambda = -(alpha + 1/R)^2 (valid for
alpha < -1/R) without assuming the solution shape: the substitution
phi = r*u turns the radial exterior equation u'' + (2/r)u' = k^2 u into
phi'' = k^2 phi, which is integrated numerically backward from a far
truncation radius with a generic ODE solver.  The Robin condition for
the exterior domain (inward normal at r=R) reads u'(R) = alpha*u(R);
its residual as a function of k is rootfound with brentq.

Also confirms that no root exists in the subcritical regime
alpha >= -1/R, where the discrete spectrum is empty.
"""

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

CASES = [
    ("a_m2_r1", -2.0, 1.0),
    ("a_m4_r05", -4.0, 0.5),
    ("a_m15_r2", -1.5, 2.0),
]

SUBCRITICAL = [(-0.5, 1.0), (-1.0, 1.0)]


def bc_residual(k, alpha, R):
    rmax = R + 40.0 / k
    sol = solve_ivp(
        lambda r, y: [y[1], k * k * y[0]],
        (rmax, R),
        [1.0, -k],
        method="DOP853",
        rtol=1e-12,
        atol=1e-14,
        dense_output=False,
    )
    phi, dphi = sol.y[0][-1], sol.y[1][-1]
    u = phi / R
    du = dphi / R - phi / R**2
    return (du - alpha * u) / abs(phi / R)


def compute():
    vals = {}
    for tag, alpha, R in CASES:
        klo, khi = 1e-3, -alpha + 1.0
        k = brentq(lambda k: bc_residual(k, alpha, R), klo, khi, xtol=1e-13)
        expected = -alpha - 1.0 / R
        assert abs(k - expected) < 1e-9, (k, expected)
        vals[f"ball3d_k_{tag}"] = k
        vals[f"ball3d_lambda_{tag}"] = -k * k
    for alpha, R in SUBCRITICAL:
        ks = np.linspace(1e-3, -alpha + 1.0, 200)
        signs = np.sign([bc_residual(k, alpha, R) for k in ks])
        assert np.all(signs == signs[0]), "unexpected bound state below critical coupling"
    return vals


if __name__ == "__main__":
    for name, v in compute().items():
        print(f"{name} = {v:.17g}")
