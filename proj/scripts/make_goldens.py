"""Regenerates tests/golden_values.hpp from the oracle scripts.

Run from the repository root:

    python3 scripts/make_goldens.py

The header is committed; the oracles only need to run again if a pin
point is added.  Production code never includes the generated header,
only the test suite does.
"""

import pathlib
import sys

import mpmath as mp

sys.path.insert(0, str(pathlib.Path(__file__).parent))

import oracle_ball3d_shooting
import oracle_bessel
import oracle_disk_eigenvalue
import oracle_ellipse
import oracle_halfline_fem
import oracle_spherocylinder_mc

HEADER = """\
// Generated by scripts/make_goldens.py -- do not edit by hand.
// Reference values come from arbitrary-precision (mpmath) and
// independent-discretization (scipy) oracles; see scripts/oracle_*.py.
#pragma once

#include <array>

namespace golden {

"""

FOOTER = "\n} // namespace golden\n"


def fmt(v):
    if isinstance(v, (float, int)):
        return f"{float(v):.17g}"
    return mp.nstr(v, 22, strip_zeros=False)


def main():
    out = pathlib.Path(__file__).parent.parent / "tests" / "golden_values.hpp"
    sections = [
        ("modified Bessel pins (mpmath, 60 digits)", oracle_bessel.compute()),
        ("disk-exterior eigenvalues (mpmath bisection, 40 digits)",
         oracle_disk_eigenvalue.compute()),
        ("3D ball-exterior shooting (scipy DOP853 + brentq)",
         oracle_ball3d_shooting.compute()),
        ("ellipse a=2,b=1 boundary quadrature (mpmath)", oracle_ellipse.compute()),
        ("spherocylinder r=1,L=4 Monte-Carlo (numpy, seeded)",
         oracle_spherocylinder_mc.compute()),
        ("reduced half-line spherocylinder weight (scipy, uniform mesh)",
         oracle_halfline_fem.compute()),
    ]
    parts = [HEADER]
    for title, vals in sections:
        parts.append(f"// {title}\n")
        for name, v in vals.items():
            if isinstance(v, list):
                body = ", ".join(fmt(u) for u in v)
                parts.append(
                    f"inline constexpr std::array<double, {len(v)}> {name}{{{{{body}}}}};\n")
            else:
                parts.append(f"inline constexpr double {name} = {fmt(v)};\n")
        parts.append("\n")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("".join(parts).rstrip() + FOOTER)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
