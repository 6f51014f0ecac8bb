#ifndef PTRIG_HYPERSERIES_HPP
#define PTRIG_HYPERSERIES_HPP

#include <complex>
#include <vector>

#include "ptrig/errors.hpp"
#include "ptrig/tolerance.hpp"

namespace ptrig {

/// Outcome of a truncated series evaluation.
struct SeriesResult {
    std::complex<double> value{0.0};
    int terms_used = 0;
    bool converged = false;
    double truncation_bound = 0.0; ///< magnitude of the first omitted term
};

/// A generalized hypergeometric series pFq(a1..ap; b1..bq; z).
/// No denominator parameter may be a non-positive integer.
struct PfqSpec {
    std::vector<double> numerator_params;
    std::vector<double> denominator_params;
    std::complex<double> argument{0.0};
};

/// Term-ratio evaluation of pFq. Terminating series (a numerator parameter a
/// non-positive integer) are summed exactly; otherwise p = q+1 requires
/// |z| <= 1 - 1e-6 and p > q+1 is rejected for z != 0. Stops once two
/// consecutive terms fall below eps_term * max(1, |partial sum|); a single
/// small term is not trusted because several of the series used here
/// alternate in sign.
SeriesResult pfq_series(const PfqSpec& spec, const ToleranceConfig& cfg = {});

/// 2F1(lambda, -lambda; 1/2; (2-x)/4), which equals cos(lambda*acos(x/2)) on
/// -2 <= x <= 2. Requires |2-x| < 4.
double chebyshev_2f1(double lambda, double x, const ToleranceConfig& cfg = {});

/// The cube-root radical of xi^3 - 3 xi = tau as a binomial series:
///   sum_n 2/(1-3n) * C(3n,n) * ((2-tau)/27)^n,   |2-tau| < 4.
/// Binomial coefficients advance by a multiplicative recurrence so no
/// factorial ever overflows.
SeriesResult binomial_c13_series(std::complex<double> tau, const ToleranceConfig& cfg = {});

/// Root of w^5 - w + t = 0 branching from w(0) = 0:
///   w = t * 4F3(1/5,2/5,3/5,4/5; 1/2,3/4,5/4; 3125 t^4/256),
/// valid for |t| < 4/5^(5/4) ~= 0.534992.
SeriesResult bring_series(double t, const ToleranceConfig& cfg = {});

/// Root of 3 psi^5 + 5 psi + (5 phi - 8) = 0 branching from psi(8/5) = 0:
///   psi = -(1/5)(5 phi - 8) * 4F3(1/5,2/5,3/5,4/5; 1/2,3/4,5/4; -3(5 phi-8)^4/256),
/// valid for |5 phi - 8| < (256/3)^(1/4) ~= 3.039343.
SeriesResult cos_m_series(double phi, const ToleranceConfig& cfg = {});

} // namespace ptrig

#endif
