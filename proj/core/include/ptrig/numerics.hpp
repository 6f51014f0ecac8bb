#ifndef PTRIG_NUMERICS_HPP
#define PTRIG_NUMERICS_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "ptrig/errors.hpp"
#include "ptrig/tolerance.hpp"

namespace ptrig {

struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
    }
};

/// Adaptive Simpson integration of f over iv to absolute tolerance tol.
///
/// Endpoint singularities of the (1-xi^p)^(1/q) kind (bounded value,
/// unbounded derivative) are handled by splitting geometrically shrinking
/// panels off both endpoints before recursing, so the Richardson test never
/// has to resolve the singular layer on its own. Deterministic for fixed
/// inputs. Throws DepthExceeded past 40 recursion levels.
double adaptive_quad(const std::function<double(double)>& f, Interval iv, double tol);

/// Bracketed root finder: bisection down to width 1e-3, then Newton steps
/// that fall back to bisection whenever they leave the bracket or fail to
/// contract. Requires a sign change over iv. The result never leaves iv.
double bisect_then_newton(const std::function<double(double)>& f,
                          const std::function<double(double)>& df,
                          Interval iv, const ToleranceConfig& cfg = {});

/// All complex roots of a real polynomial (coefficients in ascending degree
/// order, degree <= 16) by Aberth-Ehrlich simultaneous iteration with a
/// per-root Newton polish. Seeds sit on a circle of radius
/// 1 + max|c_i|/|c_lead| with a fixed 0.4 rad offset to break symmetry;
/// one retry with rotated seeds before giving up.
std::vector<std::complex<double>> all_roots(std::span<const double> coeffs,
                                            const ToleranceConfig& cfg = {});

// --- small polynomial helpers shared by the solvers and their tests ---

std::complex<double> poly_eval(std::span<const double> coeffs, std::complex<double> x);
double poly_eval(std::span<const double> coeffs, double x);
std::vector<double> poly_derivative(std::span<const double> coeffs);

/// max(1, sum_i |c_i| |x|^i): the denominator of scale-aware residuals.
double residual_scale(std::span<const double> coeffs, std::complex<double> x);

/// |p(x)| / residual_scale(p, x)
double relative_residual(std::span<const double> coeffs, std::complex<double> x);

} // namespace ptrig

#endif
