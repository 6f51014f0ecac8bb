#ifndef PTRIG_GENTRIG_HPP
#define PTRIG_GENTRIG_HPP

#include <vector>

#include "ptrig/errors.hpp"
#include "ptrig/tolerance.hpp"

namespace ptrig {

/// Exponent pair of the generalized family C^p + S^q = 1. p and q must be
/// coprime; (2,2) is additionally accepted because it is the circular case
/// the whole family generalizes.
struct GenTrigParams {
    int p;
    int q;
};

void validate_params(const GenTrigParams& params);

/// A solved point of the system
///   C^p + S^q = 1,
///   (1/2) C S + integral_C^1 (1 - xi^p)^(1/q) d xi = phi / 2.
struct GenTrigPoint {
    GenTrigParams params;
    double phi;
    double c;
    double s;
};

/// Upper end of the geometric branch: twice the full area integral, taken
/// from -1 for even p and from 0 for odd p.
double gen_phi_max(const GenTrigParams& params, const ToleranceConfig& cfg = {});

/// Solve the two-equation system for (C, S) at the given phi. The geometric
/// branch starts at (1, 0) and C decreases strictly with phi; the solver
/// brackets C and polishes with Newton steps whose residuals are refreshed
/// by adaptive quadrature. For q = 1 and even p the point extends to every
/// real phi through the closed polynomial relation (see q1_polynomial).
GenTrigPoint gen_point(const GenTrigParams& params, double phi,
                       const ToleranceConfig& cfg = {});

struct GenDerivatives {
    double dc; ///< -q S^(q-1) / (q S^q + p C^p)
    double ds; ///< +p C^(p-1) / (q S^q + p C^p)
};

GenDerivatives gen_derivatives(const GenTrigPoint& point);

/// T = S / C with dT/dphi = 1/C^2. Throws SingularPoint at C = 0.
double gen_tan(const GenTrigPoint& point);

/// Ascending coefficients of (p-1) C^(p+1) + (p+1) C + (p+1) phi - 2p = 0,
/// the closed relation obtained for q = 1. At p = 2 this is the defining
/// cubic of the parabolic cosine, at p = 4 the defining quintic of cos m.
std::vector<double> q1_polynomial(int p, double phi);

/// The (4,1) member: real root of 3 psi^5 + 5 psi + (5 phi - 8) = 0,
/// continuous from cos_m(0) = 1 (the root is unique: the derivative
/// 15 psi^4 + 5 never vanishes). Total on the reals.
double cos_m(double phi, const ToleranceConfig& cfg = {});

/// sin m = 1 - (cos m)^4, so cos_m^4 + sin_m = 1 holds exactly.
double sin_m(double phi, const ToleranceConfig& cfg = {});

} // namespace ptrig

#endif
