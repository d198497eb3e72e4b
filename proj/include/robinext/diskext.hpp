// Lowest Robin eigenvalue in the exterior of a disk (2D) and a ball (3D).
//
// For a disk of radius R with boundary parameter alpha < 0 the eigenvalue
// is lambda = -k^2, where k solves k*K1(kR) + alpha*K0(kR) = 0.  The root
// lies strictly inside (sqrt(max(0, alpha^2 + alpha/R)), |alpha|), which
// doubles as the a-priori bound -alpha^2 < lambda < -alpha^2 - alpha/R.
// All transcendental evaluations use exponentially scaled Bessel values,
// so strong coupling (|alpha| R large) neither overflows nor underflows.
#pragma once

#include <stdexcept>

namespace robinext::diskext {

struct DiskSolution {
    double alpha;
    double R;
    double k;        // decay rate, lambda = -k^2
    double lambda;
    double residual; // |k K1(kR) + alpha K0(kR)| in scaled form at the root
};

struct GapResult {
    double R1;    // perimeter-matched disk radius
    double R2;    // area-matched disk radius
    double bound; // upper bound for the shape's eigenvalue
    double gap;   // lambda(R2 exterior) - lambda(R1 exterior) >= 0
};

// A-priori bounds (-alpha^2, -alpha^2 - alpha/R).  Throws std::domain_error
// for alpha >= 0 ("no discrete eigenvalue") or R <= 0.
std::pair<double, double> bounds_2d(double alpha, double R);

// Root of the implicit equation by bisection + bracket-guarded Newton.
// tol bounds the scaled residual at the returned root.
DiskSolution solve_disk_exterior_2d(double alpha, double R, double tol = 1e-12);

// d lambda / dR, strictly negative.  Closed form evaluated at the solved
// eigenvalue: -(2/R) * lambda * (lambda + alpha^2 + alpha/R) / (lambda + alpha^2).
double dlambda_dR(double alpha, double R);

// d lambda / d alpha, strictly positive: the squared boundary L2 norm of the
// L2-normalized eigenfunction, (2/R) * K0^2 / (K1^2 - K0^2) at kR.
double dlambda_dalpha_disk(double alpha, double R);

// Value at radius r >= R of the eigenfunction K0(k r), normalized so that
// 2 pi * int_R^inf psi^2 r dr = 1.  Throws std::domain_error for r < R.
double eigenfunction_disk(const DiskSolution& sol, double r);

// 3D ball exterior: -(alpha + 1/R)^2 when alpha < -1/R, else 0 (the bottom
// of the essential spectrum; no discrete eigenvalue exists there).
double solve_ball_exterior_3d(double alpha, double R);

// Two-radii comparison for a shape with the given perimeter and area:
// R1 = perimeter/(2 pi), R2 = sqrt(area/pi).  Requires the isoperimetric
// feasibility perimeter^2 >= 4 pi area; gap >= 0 with equality iff R1 = R2.
GapResult quantitative_gap(double alpha, double perimeter, double area);

} // namespace robinext::diskext
