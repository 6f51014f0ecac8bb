#ifndef PTRIG_SPECIAL_CORE_HPP
#define PTRIG_SPECIAL_CORE_HPP

#include <complex>
#include <vector>

#include "ptrig/errors.hpp"
#include "ptrig/hyperseries.hpp"
#include "ptrig/tolerance.hpp"

namespace ptrig {

/// A point (phi, cos p, sin p) on the parabolic-trigonometric curve.
/// Invariants: c^2 + s = 1 and c^3 + 3c + 3 phi - 4 = 0, both to residual
/// tolerance.
struct PtfPoint {
    double phi;
    double c;
    double s;
};

/// C_{1/3}(a) = 2 cos(acos(a/2)/3) with the principal complex arccos
/// (branch cuts (-inf,-1] and [1,inf)). Whatever the branch, the result
/// satisfies r^3 - 3r = a by the triple-angle identity; the principal
/// choice only pins down which of the three roots comes back.
std::complex<double> chebyshev_radical(std::complex<double> a);

/// The parabolic cosine: -2 sinh(asinh((3 phi - 4)/2)/3), the unique real
/// root of Y^3 + 3Y + 3 phi - 4 = 0. Total on the reals, strictly decreasing.
double cos_p(double phi);

/// The parabolic sine: 3 - 2 cosh((2/3) asinh((3 phi - 4)/2)), which equals
/// 1 - cos_p(phi)^2.
double sin_p(double phi);

PtfPoint ptf_point(double phi);

struct PtfDerivatives {
    double dc; ///< d(cos p)/d phi = -1/(1 + C^2), always negative
    double ds; ///< d(sin p)/d phi = 2C/(1 + C^2), carries the sign of C
};

PtfDerivatives ptf_derivatives(double phi);

/// Parabolic cosine via the binomial radical series evaluated at the
/// imaginary argument i*tau, tau = 4 - 3 phi. For real tau,
///   C_{1/3}(i tau) = sqrt(3) cosh(B) + i sinh(B),  B = asinh(tau/2)/3,
/// so the real cosine is twice the imaginary part of the series value:
/// 2 sinh(asinh(tau/2)/3) = -2 sinh(asinh((3 phi-4)/2)/3). Twice the real
/// part, which another route suggests, fails against the closed form; the
/// rule used here is the one that matches it. Requires |4 - 3 phi| < 2 sqrt(3).
SeriesResult cos_p_series(double phi, const ToleranceConfig& cfg = {});

enum class HpsBranch { principal, largest };

/// |phi| bound of the principal hyper-parabolic branch: 2/(3 sqrt(7)).
double hyper_parabolic_phi_crit();

/// A real root S of (7/3) S^3 - S = phi. `principal` is the branch through
/// S(0) = 0, defined only for |phi| < 2/(3 sqrt(7)); `largest` is the
/// greatest real root and is total.
double hyper_parabolic_sin(double phi, HpsBranch branch);

/// Every real root of (7/3) S^3 - S = phi, ascending. Three roots inside
/// |phi| < 2/(3 sqrt(7)), one outside (duplicates at the fold itself).
std::vector<double> hyper_parabolic_sin_all(double phi);

/// x = (a + b (a + b (a + ...)^(1/m))^(1/m))^(1/m) as the fixed point of
/// x <- (a + b x)^(1/m), seeded at x0 = a^(1/m) (real branch for odd m).
struct NestedRadicalSpec {
    double a;
    double b;
    int m; ///< >= 2
};

/// Attracting fixed point of the nested-radical map; the result satisfies
/// |x^m - a - b x| <= eps_residual * max(1, |a|, |b|). Throws NoConvergence
/// when the fixed point repels or the cap is hit, DomainError when an even
/// root meets a negative radicand.
double nested_radical(const NestedRadicalSpec& spec, const ToleranceConfig& cfg = {});

} // namespace ptrig

#endif
