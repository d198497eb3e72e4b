"""Refined-grid reference for the reduced half-line problem.

Pins the lowest eigenvalue of the weighted quotient

    [ int_0^T psi'^2 w dt + alpha*w(0)*psi(0)^2 ] / int_0^T psi^2 w dt,
    w(t) = a + b t + c t^2

for the spherocylinder weight (r=1, L=4): a = 12*pi, b = 16*pi, c = 4*pi,
alpha = -2.  Discretization here is deliberately different from the
production solver: uniform mesh, scipy sparse shift-invert eigensolver,
n in {10000, 20000} with Richardson extrapolation.  Truncation T=16 is
checked by a doubling run.
"""

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

ALPHA = -2.0
W = (12 * np.pi, 16 * np.pi, 4 * np.pi)


def lowest(alpha, w, T, n):
    a, b, c = w
    t = np.linspace(0.0, T, n + 1)
    h = T / n
    g = np.sqrt(3.0 / 5.0)
    xg = np.array([-g, 0.0, g])
    wg = np.array([5 / 9, 8 / 9, 5 / 9])
    tm = 0.5 * (t[:-1] + t[1:])
    kd = np.zeros(n + 1)
    ke = np.zeros(n)
    md = np.zeros(n + 1)
    me = np.zeros(n)
    for q in range(3):
        tq = tm + 0.5 * h * xg[q]
        wq = (a + b * tq + c * tq * tq) * (0.5 * h * wg[q])
        phi0 = (t[1:] - tq) / h
        phi1 = (tq - t[:-1]) / h
        kd[:-1] += wq / h**2
        kd[1:] += wq / h**2
        ke -= wq / h**2
        md[:-1] += wq * phi0 * phi0
        md[1:] += wq * phi1 * phi1
        me += wq * phi0 * phi1
    kd[0] += alpha * a
    K = sp.diags([ke, kd, ke], [-1, 0, 1], format="csc")
    M = sp.diags([me, md, me], [-1, 0, 1], format="csc")
    vals, _ = spla.eigsh(K, k=1, M=M, sigma=-1.5 * alpha**2, which="LM")
    return vals[0]


def compute():
    T = 16.0
    l1 = lowest(ALPHA, W, T, 10000)
    l2 = lowest(ALPHA, W, T, 20000)
    rich = l2 + (l2 - l1) / 3
    l2b = lowest(ALPHA, W, 2 * T, 40000)  # same element size, doubled window
    richb = l2b + (l2b - lowest(ALPHA, W, 2 * T, 20000)) / 3
    assert abs(richb - rich) < 1e-9, (rich, richb)
    return {"sc_reduced_lambda": rich, "sc_reduced_trunc_check": abs(richb - rich)}


if __name__ == "__main__":
    for name, v in compute().items():
        print(f"{name} = {v:.17g}")
