#include "robinext/sl1d.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace robinext::sl1d {

namespace {

constexpr double kBeta = 4.0; // mesh grading strength

struct Tridiag {
    std::vector<double> kd, ke; // stiffness diagonal / off-diagonal
    std::vector<double> md, me; // mass
};

void check_inputs(double alpha, const WeightPoly& w) {
    if (!(alpha < 0.0) || !std::isfinite(alpha))
        throw std::domain_error("no discrete eigenvalue for alpha >= 0");
    if (!(w.a > 0.0) || !(w.b >= 0.0) || !(w.c >= 0.0))
        throw std::domain_error("degenerate weight: need a > 0, b >= 0, c >= 0");
}

// 3-point Gauss: exact for the quartic mass integrand phi^2 * w.
constexpr double kGx[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double kGw[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

Tridiag assemble(double alpha, const WeightPoly& w, const std::vector<double>& t) {
    const std::size_t n = t.size() - 1;
    Tridiag m;
    m.kd.assign(n + 1, 0.0);
    m.ke.assign(n, 0.0);
    m.md.assign(n + 1, 0.0);
    m.me.assign(n, 0.0);
    for (std::size_t e = 0; e < n; ++e) {
        const double h = t[e + 1] - t[e];
        const double mid = 0.5 * (t[e] + t[e + 1]);
        double iw = 0.0, m00 = 0.0, m01 = 0.0, m11 = 0.0;
        for (int q = 0; q < 3; ++q) {
            const double tq = mid + 0.5 * h * kGx[q];
            const double wq = (w.a + tq * (w.b + tq * w.c)) * (0.5 * h * kGw[q]);
            const double p1 = (tq - t[e]) / h, p0 = 1.0 - p1;
            iw += wq;
            m00 += wq * p0 * p0;
            m01 += wq * p0 * p1;
            m11 += wq * p1 * p1;
        }
        const double ks = iw / (h * h);
        m.kd[e] += ks;
        m.kd[e + 1] += ks;
        m.ke[e] -= ks;
        m.md[e] += m00;
        m.md[e + 1] += m11;
        m.me[e] += m01;
    }
    m.kd[0] += alpha * w.a;
    return m;
}

// Number of pencil eigenvalues below sigma: negative pivots of the LDL^T
// factorization of K - sigma M (M is positive definite).
std::size_t sturm_count(const Tridiag& m, double sigma) {
    const std::size_t n = m.kd.size();
    std::size_t neg = 0;
    double d = m.kd[0] - sigma * m.md[0];
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++neg;
    for (std::size_t i = 1; i < n; ++i) {
        const double e = m.ke[i - 1] - sigma * m.me[i - 1];
        d = (m.kd[i] - sigma * m.md[i]) - e * e / d;
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++neg;
    }
    return neg;
}

// Solve (K - sigma M) x = rhs by LDL^T without pivoting; near-singular
// pivots are nudged, which is exactly what inverse iteration wants.
void shifted_solve(const Tridiag& m, double sigma, std::vector<double>& x) {
    const std::size_t n = m.kd.size();
    std::vector<double> d(n), l(n - 1);
    d[0] = m.kd[0] - sigma * m.md[0];
    if (std::abs(d[0]) < 1e-300) d[0] = 1e-300;
    for (std::size_t i = 1; i < n; ++i) {
        const double e = m.ke[i - 1] - sigma * m.me[i - 1];
        l[i - 1] = e / d[i - 1];
        d[i] = (m.kd[i] - sigma * m.md[i]) - l[i - 1] * e;
        if (std::abs(d[i]) < 1e-300) d[i] = 1e-300;
    }
    for (std::size_t i = 1; i < n; ++i) x[i] -= l[i - 1] * x[i - 1];
    for (std::size_t i = 0; i < n; ++i) x[i] /= d[i];
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= l[i] * x[i + 1];
}

void mat_vec(const std::vector<double>& diag, const std::vector<double>& off,
             const std::vector<double>& x, std::vector<double>& y) {
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double v = diag[i] * x[i];
        if (i > 0) v += off[i - 1] * x[i - 1];
        if (i + 1 < n) v += off[i] * x[i + 1];
        y[i] = v;
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

std::vector<double> graded_mesh(double T, std::size_t n) {
    if (!(T > 0.0)) throw std::domain_error("truncation length must be positive");
    if (n < 16) throw std::domain_error("need at least 16 elements");
    std::vector<double> t(n + 1);
    const double denom = std::expm1(kBeta);
    for (std::size_t i = 0; i <= n; ++i)
        t[i] = T * std::expm1(kBeta * static_cast<double>(i) / static_cast<double>(n)) /
               denom;
    t[0] = 0.0;
    t[n] = T;
    return t;
}

double truncation_length(double alpha, const WeightPoly& w) {
    check_inputs(alpha, w);
    double klo;
    if (w.c == 0.0) {
        const double R = w.a / (2.0 * M_PI);
        klo = std::sqrt(std::max(0.0, alpha * alpha + alpha / R));
    } else {
        const double R = std::sqrt(w.a / (4.0 * M_PI));
        klo = std::max(0.0, -alpha - 1.0 / R);
    }
    const double k0 = 0.5 * (klo - alpha);
    return 15.0 / k0;
}

EigenResult solve_on_mesh(double alpha, const WeightPoly& w,
                          const std::vector<double>& nodes) {
    check_inputs(alpha, w);
    if (nodes.size() < 17) throw std::domain_error("need at least 16 elements");
    if (nodes.front() != 0.0)
        throw std::domain_error("mesh must start at t = 0 (Robin endpoint)");
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!(nodes[i] < nodes[i + 1]))
            throw std::domain_error("mesh nodes must be strictly increasing");

    const Tridiag m = assemble(alpha, w, nodes);
    const std::size_t N = m.kd.size();

    if (sturm_count(m, 0.0) == 0)
        throw std::runtime_error("discrete problem has no negative eigenvalue "
                                 "(mesh too coarse for this weight?)");

    double hi = 0.0;
    double lo = -1.5 * alpha * alpha - 1.0;
    for (int guard = 0; sturm_count(m, lo) > 0; ++guard) {
        if (guard > 80) throw std::runtime_error("failed to bracket the spectrum bottom");
        lo = 2.0 * lo - 1.0;
    }
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (sturm_count(m, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    const double lam_bisect = 0.5 * (lo + hi);

    std::vector<double> x(N, 1.0), y(N), kx(N), mx(N);
    for (int it = 0; it < 4; ++it) {
        mat_vec(m.md, m.me, x, y);
        shifted_solve(m, lam_bisect, y);
        mat_vec(m.md, m.me, y, mx);
        const double nrm = std::sqrt(dot(y, mx));
        for (std::size_t i = 0; i < N; ++i) x[i] = y[i] / nrm;
    }
    double mean = 0.0;
    for (double v : x) mean += v;
    if (mean < 0.0)
        for (double& v : x) v = -v;

    mat_vec(m.kd, m.ke, x, kx);
    mat_vec(m.md, m.me, x, mx);
    const double lambda = dot(x, kx) / dot(x, mx);
    if (std::abs(lambda - lam_bisect) > 1e-9 * std::max(1.0, std::abs(lam_bisect)))
        throw std::runtime_error("inverse iteration disagrees with Sturm bisection: " +
                                 std::to_string(lambda) + " vs " +
                                 std::to_string(lam_bisect));
    double rnorm = 0.0, knorm = 0.0, mnorm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double r = kx[i] - lambda * mx[i];
        rnorm += r * r;
        knorm += kx[i] * kx[i];
        mnorm += mx[i] * mx[i];
    }
    EigenResult res;
    res.lambda = lambda;
    res.vector = std::move(x);
    res.T = nodes.back();
    res.n = nodes.size() - 1;
    res.residual = std::sqrt(rnorm) /
                   (std::sqrt(knorm) + std::abs(lambda) * std::sqrt(mnorm));
    return res;
}

EigenResult solve_halfline(double alpha, const WeightPoly& w, double T,
                           std::size_t n) {
    return solve_on_mesh(alpha, w, graded_mesh(T, n));
}

double reduced_bound_2d(double alpha, double perimeter) {
    if (!(perimeter > 0.0)) throw std::domain_error("perimeter must be positive");
    const WeightPoly w{perimeter, 2.0 * M_PI, 0.0};
    const double T = truncation_length(alpha, w);
    const double l1 = solve_halfline(alpha, w, T, 2048).lambda;
    const double l2 = solve_halfline(alpha, w, T, 4096).lambda;
    return l2 + (l2 - l1) / 3.0; // h^2 Richardson at mesh ratio 2
}

double reduced_bound_3d(double alpha, const geometry::Surface3D& surf) {
    geometry::check_surface(surf);
    const WeightPoly w{surf.area, 2.0 * surf.totalMeanCurv, 4.0 * M_PI};
    const double T = truncation_length(alpha, w);
    const double l1 = solve_halfline(alpha, w, T, 2048).lambda;
    const double l2 = solve_halfline(alpha, w, T, 4096).lambda;
    return l2 + (l2 - l1) / 3.0;
}

} // namespace robinext::sl1d
