#include "ptrig/special_core.hpp"

#include <algorithm>
#include <cmath>

namespace ptrig {

namespace {

using cd = std::complex<double>;

constexpr double kTwoPi = 6.28318530717958647692;

} // namespace

std::complex<double> chebyshev_radical(std::complex<double> a) {
    return 2.0 * std::cos(std::acos(0.5 * a) / 3.0);
}

double cos_p(double phi) {
    return -2.0 * std::sinh(std::asinh(0.5 * (3.0 * phi - 4.0)) / 3.0);
}

double sin_p(double phi) {
    return 3.0 - 2.0 * std::cosh(2.0 / 3.0 * std::asinh(0.5 * (3.0 * phi - 4.0)));
}

PtfPoint ptf_point(double phi) { return {phi, cos_p(phi), sin_p(phi)}; }

PtfDerivatives ptf_derivatives(double phi) {
    const double c = cos_p(phi);
    const double den = 1.0 + c * c;
    return {-1.0 / den, 2.0 * c / den};
}

SeriesResult cos_p_series(double phi, const ToleranceConfig& cfg) {
    const double tau = 4.0 - 3.0 * phi;
    if (4.0 + tau * tau >= 16.0) // |2 - i tau| < 4
        throw DomainError("cos_p_series: requires |4 - 3 phi| < 2 sqrt(3)");
    // The complex partial sum stays below magnitude 2 on the whole strip, so
    // halving the term tolerance keeps the extracted real value within the
    // caller's eps_term budget.
    ToleranceConfig inner = cfg;
    inner.eps_term = 0.5 * cfg.eps_term;
    SeriesResult res = binomial_c13_series(cd(0.0, tau), inner);
    res.value = cd(2.0 * res.value.imag(), 0.0);
    res.truncation_bound *= 2.0;
    return res;
}

double hyper_parabolic_phi_crit() { return 2.0 / (3.0 * std::sqrt(7.0)); }

std::vector<double> hyper_parabolic_sin_all(double phi) {
    // Rescale (7/3) S^3 - S = phi to w^3 - 3w = v with S = w/sqrt(7),
    // v = 3 sqrt(7) phi.
    const double rt7 = std::sqrt(7.0);
    const double v = 3.0 * rt7 * phi;
    std::vector<double> roots;
    if (std::abs(v) <= 2.0) {
        const double theta = std::acos(0.5 * v);
        for (int k = 0; k < 3; ++k)
            roots.push_back(2.0 * std::cos((theta - kTwoPi * k) / 3.0) / rt7);
    } else {
        const double w = 2.0 * std::cosh(std::acosh(0.5 * std::abs(v)) / 3.0);
        roots.push_back(std::copysign(w, v) / rt7);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double hyper_parabolic_sin(double phi, HpsBranch branch) {
    if (branch == HpsBranch::principal && std::abs(phi) >= hyper_parabolic_phi_crit())
        throw DomainError("hyper_parabolic_sin: principal branch needs |phi| < 2/(3 sqrt(7))");
    const std::vector<double> roots = hyper_parabolic_sin_all(phi);
    if (branch == HpsBranch::largest) return roots.back();
    return roots[1]; // the middle root passes through (0, 0)
}

double nested_radical(const NestedRadicalSpec& spec, const ToleranceConfig& cfg) {
    cfg.validate();
    if (spec.m < 2) throw std::invalid_argument("nested_radical: m must be >= 2");
    const bool odd = (spec.m % 2) != 0;
    const double inv_m = 1.0 / spec.m;

    auto mth_root = [&](double v) {
        if (odd) return std::copysign(std::pow(std::abs(v), inv_m), v);
        if (v < 0.0)
            throw DomainError("nested_radical: negative radicand under an even root");
        return std::pow(v, inv_m);
    };

    double x = mth_root(spec.a);
    int small = 0;
    for (int it = 0; it < cfg.max_iter && small < 2; ++it) {
        const double xn = mth_root(spec.a + spec.b * x);
        small = (std::abs(xn - x) <= 0.5e-15 * (1.0 + std::abs(xn))) ? small + 1 : 0;
        x = xn;
    }
    // pow with an integral exponent accepts a negative base
    const double xm = std::pow(x, static_cast<double>(spec.m));
    const double residual = std::abs(xm - spec.a - spec.b * x);
    const double scale = std::max({1.0, std::abs(spec.a), std::abs(spec.b)});
    if (small < 2 || residual > cfg.eps_residual * scale)
        throw NoConvergence("nested_radical: fixed point not attracting or cap reached");
    return x;
}

} // namespace ptrig
