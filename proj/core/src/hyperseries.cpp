#include "ptrig/hyperseries.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace ptrig {

namespace {

using cd = std::complex<double>;

bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::floor(v);
}

// Generic driver: term_0 given, ratio(k) = term_{k+1}/term_k. Shared by the
// pFq engine and the binomial form so both obey the same stopping rule.
SeriesResult sum_by_ratio(cd term0, const std::function<cd(int)>& ratio,
                          const ToleranceConfig& cfg, const char* who) {
    SeriesResult res;
    cd sum = term0;
    cd term = term0;
    int consecutive_small = 0;
    for (int k = 1; k <= cfg.max_terms; ++k) {
        const cd next = term * ratio(k - 1);
        if (next == cd(0.0)) { // terminating series
            res.value = sum;
            res.terms_used = k;
            res.converged = true;
            res.truncation_bound = 0.0;
            return res;
        }
        const double small_gate = cfg.eps_term * std::max(1.0, std::abs(sum));
        consecutive_small = (std::abs(next) <= small_gate) ? consecutive_small + 1 : 0;
        if (consecutive_small >= 2) {
            res.value = sum;
            res.terms_used = k;
            res.converged = true;
            res.truncation_bound = std::abs(next);
            return res;
        }
        sum += next;
        term = next;
        if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
            throw NoConvergence(std::string(who) + ": series diverged");
    }
    throw NoConvergence(std::string(who) + ": term cap reached before convergence");
}

} // namespace

SeriesResult pfq_series(const PfqSpec& spec, const ToleranceConfig& cfg) {
    cfg.validate();
    for (const double b : spec.denominator_params)
        if (is_nonpositive_integer(b))
            throw DomainError("pfq_series: denominator parameter is a non-positive integer");

    bool terminating = false;
    for (const double a : spec.numerator_params)
        terminating = terminating || is_nonpositive_integer(a);

    const size_t p = spec.numerator_params.size();
    const size_t q = spec.denominator_params.size();
    const double az = std::abs(spec.argument);
    if (!terminating && az > 0.0) {
        if (p == q + 1 && az > 1.0 - 1e-6)
            throw DomainError("pfq_series: argument outside the pF(p-1) convergence disc");
        if (p > q + 1)
            throw DomainError("pfq_series: series diverges for p > q+1 and z != 0");
    }

    const cd z = spec.argument;
    auto ratio = [&](int k) -> cd {
        cd r(1.0);
        for (const double a : spec.numerator_params) r *= (a + k);
        for (const double b : spec.denominator_params) r /= (b + k);
        return r * z / static_cast<double>(k + 1);
    };
    return sum_by_ratio(cd(1.0), ratio, cfg, "pfq_series");
}

double chebyshev_2f1(double lambda, double x, const ToleranceConfig& cfg) {
    if (std::abs(2.0 - x) >= 4.0)
        throw DomainError("chebyshev_2f1: requires |2 - x| < 4");
    PfqSpec spec{{lambda, -lambda}, {0.5}, cd((2.0 - x) / 4.0)};
    return pfq_series(spec, cfg).value.real();
}

SeriesResult binomial_c13_series(std::complex<double> tau, const ToleranceConfig& cfg) {
    cfg.validate();
    if (std::abs(2.0 - tau) >= 4.0)
        throw DomainError("binomial_c13_series: requires |2 - tau| < 4");
    const cd z = (2.0 - tau) / 27.0;
    // t_{n+1}/t_n combines the prefactor ratio (1-3n)/(1-3(n+1)) with the
    // binomial recurrence C(3n+3,n+1)/C(3n,n) = 3(3n+1)(3n+2)/(2(n+1)(2n+1)).
    auto ratio = [&](int n) -> cd {
        const double pref = (1.0 - 3.0 * n) / (1.0 - 3.0 * (n + 1));
        const double binr = 3.0 * (3.0 * n + 1.0) * (3.0 * n + 2.0) /
                            (2.0 * (n + 1.0) * (2.0 * n + 1.0));
        return pref * binr * z;
    };
    return sum_by_ratio(cd(2.0), ratio, cfg, "binomial_c13_series");
}

namespace {

const std::vector<double> kQuinticNum = {0.2, 0.4, 0.6, 0.8};
const std::vector<double> kQuinticDen = {0.5, 0.75, 1.25};

} // namespace

SeriesResult bring_series(double t, const ToleranceConfig& cfg) {
    const double t_star = 4.0 * std::pow(5.0, -1.25);
    if (std::abs(t) >= t_star)
        throw DomainError("bring_series: requires |t| < 4/5^(5/4)");
    const double t4 = t * t * t * t;
    PfqSpec spec{kQuinticNum, kQuinticDen, cd(3125.0 * t4 / 256.0)};
    SeriesResult res = pfq_series(spec, cfg);
    res.value *= t;
    res.truncation_bound *= std::abs(t);
    return res;
}

SeriesResult cos_m_series(double phi, const ToleranceConfig& cfg) {
    const double theta = 5.0 * phi - 8.0;
    const double theta_max = std::pow(256.0 / 3.0, 0.25);
    if (std::abs(theta) >= theta_max)
        throw DomainError("cos_m_series: requires |5 phi - 8| < (256/3)^(1/4)");
    const double th4 = theta * theta * theta * theta;
    PfqSpec spec{kQuinticNum, kQuinticDen, cd(-3.0 * th4 / 256.0)};
    SeriesResult res = pfq_series(spec, cfg);
    res.value *= -theta / 5.0;
    res.truncation_bound *= std::abs(theta) / 5.0;
    return res;
}

} // namespace ptrig
