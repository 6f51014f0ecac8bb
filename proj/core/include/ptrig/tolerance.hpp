#ifndef PTRIG_TOLERANCE_HPP
#define PTRIG_TOLERANCE_HPP

#include <stdexcept>

namespace ptrig {

/// Numerical knobs shared by every operation in the library.
/// Passed by value; all functions are pure in their arguments.
struct ToleranceConfig {
    double eps_residual = 1e-10; ///< scale-aware residual gate for certified values
    double eps_term     = 1e-15; ///< series term cutoff, relative to the partial sum
    int    max_terms    = 200;   ///< series term cap
    int    max_iter     = 100;   ///< iteration cap for fixed points / Newton / Aberth
    double eps_quad     = 1e-10; ///< adaptive quadrature tolerance

    void validate() const {
        if (!(eps_residual > 0.0) || !(eps_term > 0.0) || !(eps_quad > 0.0))
            throw std::invalid_argument("ToleranceConfig: tolerances must be > 0");
        if (max_terms < 1 || max_iter < 1)
            throw std::invalid_argument("ToleranceConfig: caps must be >= 1");
    }
};

} // namespace ptrig

#endif
