#ifndef PTRIG_POLYSOLVE_HPP
#define PTRIG_POLYSOLVE_HPP

#include <complex>
#include <optional>
#include <vector>

#include "ptrig/errors.hpp"
#include "ptrig/tolerance.hpp"

namespace ptrig {

/// Monic cubic x^3 + a x^2 + b x + c.
struct CubicEquation {
    double a;
    double b;
    double c;
};

/// Depressed/scaled form of a cubic: substituting x = sqrt(p_scale) Y + shift
/// turns the cubic into Y^3 + 3Y + (3 phi_equiv - 4) = 0. p_scale and
/// phi_equiv exist only when 3b - a^2 > 0; beta is phi_equiv specialized to
/// a = 0 and exists only when b > 0.
struct CubicReduction {
    double shift;
    std::optional<double> p_scale;
    std::optional<double> phi_equiv;
    std::optional<double> beta;
};

/// Trinomial quintic x^5 + p x + lambda.
struct QuinticTrinomial {
    double p;
    double lambda;
};

enum class RootMethod { closed_form, series, newton, simultaneous_iteration };

const char* root_method_name(RootMethod method);

/// All roots of a solved polynomial. residuals[i] is |poly(root_i)| divided
/// by the scale max(1, sum |c_k| |root_i|^k); non-real roots come in exact
/// conjugate pairs for the real-coefficient inputs handled here.
struct RootSet {
    std::vector<std::complex<double>> roots;
    std::vector<double> residuals;
    std::vector<RootMethod> methods;
};

CubicReduction reduce_cubic(const CubicEquation& eq);

/// All three roots. For 3b - a^2 > 0 the real root comes from the parabolic
/// cosine at phi_equiv; for 3b - a^2 < 0 from the cosine/cosh branches of
/// the Chebyshev radical; a degenerate middle case falls back to the real
/// cube root of the depressed constant. The remaining two roots always come
/// from the deflated quadratic x^2 + (a + x1) x - c/x1 (direct factoring
/// when x1 = 0), and every root gets a Newton polish on the original cubic.
RootSet solve_cubic(const CubicEquation& eq, const ToleranceConfig& cfg = {});

/// The real root of w^5 - w + t = 0 analytically continued from w(0) = 0
/// (the middle of the three real roots while they exist, the unique real
/// root beyond the fold). Series evaluation inside |t| < 0.53499 when it
/// converges, bracketed Newton otherwise; the result always satisfies
/// |w^5 - w + t| <= 1e-12 max(1, |t|).
double bring_root(double t, const ToleranceConfig& cfg = {});

/// All five roots of x^5 + p x + lambda. One root comes from the scaled
/// closed form (cos m for p > 0, the Bring branch for p < 0, a signed fifth
/// root for p = 0); the other four from Aberth iteration on the deflated
/// quartic, polished on the original quintic. Real/complex classification
/// follows the sign analysis of the derivative 5x^4 + p, so p > 0 yields
/// exactly one real root.
RootSet solve_quintic_trinomial(const QuinticTrinomial& eq, const ToleranceConfig& cfg = {});

/// Alternative closed form for the two non-real roots of x^3 + bx + c once
/// the real root is known, written with sec p and a nested square root. Kept
/// only as a debugging aid: its output does not satisfy the residual gate
/// (solve_cubic uses the Vieta quadratic instead), and the unit tests pin
/// down the mismatch.
std::pair<std::complex<double>, std::complex<double>>
cubic_remaining_roots_secant_form(double b, double c);

namespace detail {
std::pair<double, RootMethod> bring_root_tagged(double t, const ToleranceConfig& cfg);
}

} // namespace ptrig

#endif
