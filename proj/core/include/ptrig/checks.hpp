#ifndef PTRIG_CHECKS_HPP
#define PTRIG_CHECKS_HPP

#include <string>
#include <vector>

#include "ptrig/tolerance.hpp"

namespace ptrig::checks {

/// One invariant line of a self-check suite. `max_error` is the worst value
/// the metric reached; for monotonicity-style checks it is the worst margin
/// and must stay strictly negative.
struct CheckResult {
    std::string suite;
    std::string name;
    double max_error;
    double threshold;
    bool pass;
};

std::vector<CheckResult> identities_suite(const ToleranceConfig& cfg = {});
std::vector<CheckResult> series_suite(const ToleranceConfig& cfg = {});
std::vector<CheckResult> quadrature_suite(const ToleranceConfig& cfg = {});
std::vector<CheckResult> solvers_suite(const ToleranceConfig& cfg = {});

/// Dispatch by suite name ("identities", "series", "quadrature", "solvers",
/// "all"). Throws std::invalid_argument for anything else.
std::vector<CheckResult> run_suite(const std::string& name, const ToleranceConfig& cfg = {});

bool all_pass(const std::vector<CheckResult>& results);

} // namespace ptrig::checks

#endif
