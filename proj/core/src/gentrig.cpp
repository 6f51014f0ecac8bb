#include "ptrig/gentrig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ptrig/numerics.hpp"

namespace ptrig {

namespace {

double pow_int(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// S from C on the geometric branch: the non-negative real q-th root for even
// q, the signed real root for odd q (so S may leave [0,1] only off-branch).
double s_from_c(const GenTrigParams& params, double c) {
    double t = 1.0 - pow_int(c, params.p);
    if (params.q == 1) return t;
    if (params.q % 2 == 0) {
        t = std::max(t, 0.0); // clamp the rounding fuzz at the branch ends
        return std::pow(t, 1.0 / params.q);
    }
    return std::copysign(std::pow(std::abs(t), 1.0 / params.q), t);
}

double branch_floor(const GenTrigParams& params) {
    return (params.p % 2 == 0) ? -1.0 : 0.0;
}

// (1/2) C S + integral_C^1 (1 - xi^p)^(1/q), i.e. phi/2 as a function of C.
double half_area(const GenTrigParams& params, double c, double quad_tol) {
    const double s = s_from_c(params, c);
    double integral = 0.0;
    if (c < 1.0) {
        auto f = [&](double xi) { return s_from_c(params, xi); };
        integral = adaptive_quad(f, Interval(c, 1.0), quad_tol);
    }
    return 0.5 * c * s + integral;
}

// d(phi/2)/dC = -(S^(1-q)/(2q)) (q S^q + p C^p); used as the Newton slope.
double half_area_slope(const GenTrigParams& params, double c) {
    const double s = s_from_c(params, c);
    const double den = params.q * pow_int(s, params.q) + params.p * pow_int(c, params.p);
    if (s == 0.0)
        return (params.q == 1) ? -0.5 * den : -std::numeric_limits<double>::infinity();
    return -std::pow(s, 1.0 - params.q) / (2.0 * params.q) * den;
}

GenTrigPoint solve_q1_polynomial(const GenTrigParams& params, double phi,
                                 const ToleranceConfig& cfg) {
    const std::vector<double> poly = q1_polynomial(params.p, phi);
    const std::vector<double> dpoly = poly_derivative(poly);
    auto f = [&](double x) { return poly_eval(poly, x); };
    auto df = [&](double x) { return poly_eval(dpoly, x); };
    // even p makes the polynomial strictly increasing, so one sign change
    double lo = -1.0, hi = 1.0;
    while (f(lo) > 0.0) lo *= 2.0;
    while (f(hi) < 0.0) hi *= 2.0;
    const double c = bisect_then_newton(f, df, Interval(lo, hi), cfg);
    return {params, phi, c, s_from_c(params, c)};
}

} // namespace

void validate_params(const GenTrigParams& params) {
    if (params.p < 1 || params.q < 1)
        throw std::invalid_argument("GenTrigParams: p and q must be positive");
    if (params.p == 2 && params.q == 2) return; // circular base case
    if (std::gcd(params.p, params.q) != 1)
        throw std::invalid_argument("GenTrigParams: p and q must be coprime");
}

double gen_phi_max(const GenTrigParams& params, const ToleranceConfig& cfg) {
    validate_params(params);
    return 2.0 * half_area(params, branch_floor(params), cfg.eps_quad);
}

GenTrigPoint gen_point(const GenTrigParams& params, double phi,
                       const ToleranceConfig& cfg) {
    validate_params(params);
    cfg.validate();
    const double c_floor = branch_floor(params);
    const double solve_tol = std::min(cfg.eps_quad, 1e-12);
    const double phi_max = 2.0 * half_area(params, c_floor, solve_tol);
    const double slack = 1e-12 * std::max(1.0, std::abs(phi_max));

    if (phi < -slack || phi > phi_max + slack) {
        if (params.q == 1 && params.p % 2 == 0)
            return solve_q1_polynomial(params, phi, cfg);
        throw DomainError("gen_point: phi outside the geometric branch");
    }
    if (std::abs(phi) <= slack) return {params, phi, 1.0, 0.0};
    if (std::abs(phi - phi_max) <= slack)
        return {params, phi, c_floor, s_from_c(params, c_floor)};

    const double target = 0.5 * phi;
    auto g = [&](double c) { return half_area(params, c, solve_tol) - target; };
    // the coarse bisection stage only needs ~1e-3 resolution in C
    auto g_coarse = [&](double c) { return half_area(params, c, 1e-7) - target; };

    // bracket: the half-area decreases from phi_max/2 at c_floor to 0 at 1
    double lo = c_floor, hi = 1.0;
    double glo = 0.5 * phi_max - target;
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g_coarse(mid);
        if (gm == 0.0) return {params, phi, mid, s_from_c(params, mid)};
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }

    // the coarse areas carry ~1e-7 error; widen the bracket past it and
    // re-anchor its low end on the accurate integral
    lo = std::max(c_floor, lo - 1e-5);
    hi = std::min(1.0, hi + 1e-5);
    glo = g(lo);

    double c = 0.5 * (lo + hi);
    double gc = g(c);
    bool done = false;
    for (int it = 0; it < cfg.max_iter && !done; ++it) {
        if (std::abs(gc) <= std::max(2.0 * solve_tol, 1e-14)) {
            done = true;
            break;
        }
        if ((gc > 0.0) == (glo > 0.0)) {
            lo = c;
            glo = gc;
        } else {
            hi = c;
        }
        const double slope = half_area_slope(params, c);
        double cn = std::isfinite(slope) && slope != 0.0 ? c - gc / slope : lo - 1.0;
        if (!(cn > lo && cn < hi)) cn = 0.5 * (lo + hi);
        if (cn == c) {
            done = true; // bracket exhausted at machine resolution
            break;
        }
        c = cn;
        gc = g(c);
    }
    if (!done && std::abs(gc) > std::max(4.0 * solve_tol, 1e-12))
        throw NoConvergence("gen_point: bracketing solve stalled");
    return {params, phi, c, s_from_c(params, c)};
}

GenDerivatives gen_derivatives(const GenTrigPoint& point) {
    const int p = point.params.p, q = point.params.q;
    const double den = q * pow_int(point.s, q) + p * pow_int(point.c, p);
    if (std::abs(den) <= 1e-12 * (1.0 + std::abs(q * pow_int(point.s, q)) +
                                  std::abs(p * pow_int(point.c, p))))
        throw SingularPoint("gen_derivatives: q S^q + p C^p vanishes");
    return {-q * pow_int(point.s, q - 1) / den, p * pow_int(point.c, p - 1) / den};
}

double gen_tan(const GenTrigPoint& point) {
    if (std::abs(point.c) <= 1e-12 * (1.0 + std::abs(point.s)))
        throw SingularPoint("gen_tan: C = 0");
    return point.s / point.c;
}

std::vector<double> q1_polynomial(int p, double phi) {
    if (p < 2) throw std::invalid_argument("q1_polynomial: p must be >= 2");
    std::vector<double> coeffs(static_cast<size_t>(p) + 2, 0.0);
    coeffs[0] = (p + 1) * phi - 2.0 * p;
    coeffs[1] = p + 1;
    coeffs[static_cast<size_t>(p) + 1] = p - 1;
    return coeffs;
}

double cos_m(double phi, const ToleranceConfig& cfg) {
    const double theta = 5.0 * phi - 8.0;
    auto f = [&](double x) {
        const double x2 = x * x;
        return 3.0 * x2 * x2 * x + 5.0 * x + theta;
    };
    auto df = [&](double x) {
        const double x2 = x * x;
        return 15.0 * x2 * x2 + 5.0;
    };
    double lo = -1.0, hi = 1.0;
    while (f(lo) > 0.0) lo *= 2.0;
    while (f(hi) < 0.0) hi *= 2.0;
    return bisect_then_newton(f, df, Interval(lo, hi), cfg);
}

double sin_m(double phi, const ToleranceConfig& cfg) {
    const double c = cos_m(phi, cfg);
    return 1.0 - c * c * c * c;
}

} // namespace ptrig
