"""Adaptive-quadrature reference for ellipse perimeter and area.

The production geometry module computes perimeter and area from the
support function h(theta) = sqrt(a^2 cos^2 + b^2 sin^2) on a uniform
grid.  This oracle pins both quantities for the ellipse a=2, b=1 by
mpmath adaptive quadrature of the boundary parametrization
(x, y) = (a cos u, b sin u), which shares no code path or formula with
the support-function route.
"""

import mpmath as mp

mp.mp.dps = 40


def compute():
    a, b = mp.mpf(2), mp.mpf(1)
    speed = lambda u: mp.sqrt(a**2 * mp.sin(u) ** 2 + b**2 * mp.cos(u) ** 2)
    L = mp.quad(speed, [0, mp.pi / 2, mp.pi, 3 * mp.pi / 2, 2 * mp.pi])
    # shoelace: A = 1/2 int (x y' - y x') du = 1/2 int a*b du
    A = mp.quad(lambda u: (a * mp.cos(u)) * (b * mp.cos(u))
                - (b * mp.sin(u)) * (-a * mp.sin(u)), [0, mp.pi, 2 * mp.pi]) / 2
    return {"ellipse21_perimeter": L, "ellipse21_area": A}


if __name__ == "__main__":
    for name, v in compute().items():
        print(name, "=", mp.nstr(v, 25))
