// Reduced half-line eigenvalue problem
//
//   minimize [ int_0^inf psi'^2 w dt + alpha w(0) psi(0)^2 ] / int_0^inf psi^2 w dt
//
// over psi, with a polynomial weight w(t) = a + b t + c t^2.  The weight
// (perimeter, 2 pi, 0) realizes the radial reduction of a 2D exterior;
// (area, 2 M, 4 pi) the reduction of a 3D convex-body exterior.  The
// minimizer gives an upper bound for the corresponding exterior eigenvalue,
// with equality for the disk and the ball.
//
// Discretization: P1 finite elements on a graded mesh over [0, T], natural
// condition at T, and the Robin term alpha*w(0) added to the (0,0) entry.
// The smallest eigenvalue of the tridiagonal pencil is certified by
// bisection on the Sturm sequence (LDL^T negative-pivot count), then the
// eigenvector is recovered by inverse iteration.
#pragma once

#include <cstddef>
#include <vector>

#include "robinext/geometry.hpp"

namespace robinext::sl1d {

struct WeightPoly {
    double a; // w(0) > 0
    double b; // >= 0
    double c; // >= 0
};

struct EigenResult {
    double lambda;
    std::vector<double> vector; // mass-normalized node values, positive mean
    double T;
    std::size_t n;      // element count
    double residual;    // ||K x - lambda M x|| / (||K x|| + |lambda| ||M x||)
};

// Node positions t_i = T (e^{beta i/n} - 1)/(e^beta - 1) with beta = 4:
// successive element widths grow by the constant factor e^{beta/n}, which
// clusters nodes near t = 0 where the eigenfunction curvature concentrates.
std::vector<double> graded_mesh(double T, std::size_t n);

// Truncation rule: T = 15/k0 where k0 is the midpoint of the a-priori decay
// bracket for the disk (c = 0, effective radius w(0)/(2 pi)) or the ball
// (c > 0, effective radius sqrt(w(0)/(4 pi))).
double truncation_length(double alpha, const WeightPoly& w);

// Solve on an explicit node vector (nodes[0] must be 0, strictly increasing).
EigenResult solve_on_mesh(double alpha, const WeightPoly& w,
                          const std::vector<double>& nodes);

// Solve on the default graded mesh with n elements over [0, T].
EigenResult solve_halfline(double alpha, const WeightPoly& w, double T,
                           std::size_t n);

// Upper bound for the 2D exterior eigenvalue of a convex body with the
// given perimeter: weight (perimeter, 2 pi, 0), auto T, Richardson
// extrapolation over n in {2048, 4096}.
double reduced_bound_2d(double alpha, double perimeter);

// Upper bound for the 3D exterior eigenvalue of the convex body with the
// given surface data: weight (area, 2 M, 4 pi).  The surface is validated
// (Minkowski inequality et al.) before use.
double reduced_bound_3d(double alpha, const geometry::Surface3D& surf);

} // namespace robinext::sl1d
