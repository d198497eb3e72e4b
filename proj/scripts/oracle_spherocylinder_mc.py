"""Seeded Monte-Carlo cross-check of the spherocylinder closed forms.

For the capsule of cap radius r=1 and cylindrical axis length L=4:

  * volume by rejection sampling in a bounding box, using only the
    distance-to-segment predicate (independent of any Steiner-type
    decomposition);
  * surface area and total mean curvature by Monte-Carlo integration of
    the surface measure over the piece parametrizations (hemisphere
    Jacobian r^2 sin(theta); curvature weight 1/r on caps, 1/(2r) on
    the cylindrical face).

The RNG is seeded, so the frozen estimates and their standard errors
are reproducible bit-for-bit with the same numpy version.
"""

import numpy as np

R_CAP = 1.0
L_AXIS = 4.0
SEED = 20260822
N_VOL = 100_000_000
N_SURF = 100_000_000
CHUNK = 5_000_000


def compute():
    rng = np.random.default_rng(SEED)
    half = L_AXIS / 2

    # volume: rejection sampling, inside <=> dist(p, axis segment) <= r
    box = np.array([2 * R_CAP, 2 * R_CAP, L_AXIS + 2 * R_CAP])
    vbox = box.prod()
    hits = 0
    done = 0
    while done < N_VOL:
        n = min(CHUNK, N_VOL - done)
        p = rng.random((n, 3)) * box - box / 2
        zc = np.clip(p[:, 2], -half, half)
        d2 = p[:, 0] ** 2 + p[:, 1] ** 2 + (p[:, 2] - zc) ** 2
        hits += int(np.count_nonzero(d2 <= R_CAP * R_CAP))
        done += n
    pr = hits / N_VOL
    vol = vbox * pr
    vol_sigma = vbox * np.sqrt(pr * (1 - pr) / N_VOL)

    # caps: two hemispheres, integrand r^2 sin(theta) over [0,pi/2]x[0,2pi)
    cap_meas = (np.pi / 2) * (2 * np.pi)
    s = 0.0
    s2 = 0.0
    done = 0
    while done < N_SURF:
        n = min(CHUNK, N_SURF - done)
        theta = rng.random(n) * (np.pi / 2)
        f = R_CAP**2 * np.sin(theta)
        s += f.sum()
        s2 += (f * f).sum()
        done += n
    mean = s / N_SURF
    var = s2 / N_SURF - mean * mean
    cap_area = 2 * cap_meas * mean
    cap_sigma = 2 * cap_meas * np.sqrt(var / N_SURF)

    cyl_area = 2 * np.pi * R_CAP * L_AXIS  # constant Jacobian, zero variance
    area = cap_area + cyl_area
    area_sigma = cap_sigma

    # total mean curvature: weight 1/r on caps, 1/(2r) on the face
    mcurv = cap_area / R_CAP + cyl_area / (2 * R_CAP)
    mcurv_sigma = cap_sigma / R_CAP

    return {
        "sc_mc_volume": vol,
        "sc_mc_volume_sigma": vol_sigma,
        "sc_mc_area": area,
        "sc_mc_area_sigma": area_sigma,
        "sc_mc_mean_curv": mcurv,
        "sc_mc_mean_curv_sigma": mcurv_sigma,
    }


if __name__ == "__main__":
    for name, v in compute().items():
        print(f"{name} = {v:.17g}")
