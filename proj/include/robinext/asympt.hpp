// Large-coupling asymptotic models and the logarithmic-cutoff existence
// certificate.
//
// For alpha -> -inf the lowest exterior eigenvalue behaves like
// -alpha^2 - alpha * kappa_max + o(alpha), where the curvature coefficient
// is 1/r for a body whose boundary has largest geometric curvature 1/r.
// Comparing these two-term models against exact disk/ball values exhibits
// parameter regimes where the disk/ball stops being the maximizer among
// shapes of equal perimeter, area, surface area, or volume.  The o(alpha)
// remainder is unknown, so every verdict carries an asymptotic_regime flag
// and is gated on the model predicting a bound state at all (negative
// asymptote); the flags never silently mix model values with exact ones.
#pragma once

#include <cstdint>

namespace robinext::asympt {

struct LogCutoffThreshold {
    double log_n;      // smallest ln n making the energy negative
    double n_threshold; // smallest admissible integer n, +inf if unrepresentable
};

// Energy upper bound 2 pi / ln n + alpha * perimeter of the logarithmic
// cutoff test function; a negative value certifies a negative eigenvalue
// exists.  Requires n >= 2 and perimeter > 0.
double log_cutoff_energy(std::uint64_t n, double alpha, double perimeter);

// Smallest n making the cutoff energy negative.  For alpha >= 0 no n works
// (both fields +inf); for very weak coupling the integer threshold can
// overflow double, in which case log_n stays finite and n_threshold is +inf.
LogCutoffThreshold log_cutoff_threshold(double alpha, double perimeter);

// Union of two disks of radius r3 vs. the single disk of equal total
// perimeter (R1 = 2 r3) and equal total area (R2 = sqrt(2) r3).
struct TwoDisksReport {
    double alpha, r3;
    double R1, R2;
    double lambda_asym;     // two-term model for the union: -alpha^2 - alpha/r3
    double lambda_disk_R1;  // exact
    double lambda_disk_R2;  // exact
    bool asymptotic_regime; // model predicts a bound state (lambda_asym < 0)
    bool reversed_iso;      // regime && lambda_disk_R1 < lambda_asym
    bool reversed_icho;     // regime && lambda_disk_R2 < lambda_asym
    double crossover_alpha; // where the gated verdict flips (model caveat applies)
};

TwoDisksReport two_disks_2d(double alpha, double r3);

// Spherocylinder hull of two balls of radius r at center distance set by R,
// vs. the ball of radius R: two-term asymptotes and the leading-order
// reversal criterion r < R/2 (d = 3).  Also solves for the axis length
// matching the sphere's area or the ball's volume.
struct HullReport {
    double alpha, r, R;
    double asym_hull; // -alpha^2 - alpha/r
    double asym_ball; // -alpha^2 - 2 alpha/R
    bool criterion;   // r < R/2
    bool reversed;    // asym_ball < asym_hull
    double L_axis_area;   // 4 pi r^2 + 2 pi r L = 4 pi R^2
    double L_axis_volume; // 4/3 pi r^3 + pi r^2 L = 4/3 pi R^3
};

// Throws std::domain_error if r > R (no feasible axis length) or d != 3.
HullReport hull_3d(double alpha, double r, double R, int d = 3);

} // namespace robinext::asympt
