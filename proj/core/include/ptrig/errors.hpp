#ifndef PTRIG_ERRORS_HPP
#define PTRIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptrig {

/// Input lies outside the mathematical domain of the operation
/// (series argument off its convergence disc, branch not defined there, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An iteration or truncated series hit its cap before meeting tolerance.
class NoConvergence : public std::runtime_error {
public:
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// A derivative or quotient is evaluated at a point where it is undefined.
class SingularPoint : public std::runtime_error {
public:
    explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature recursed past its depth limit.
class DepthExceeded : public std::runtime_error {
public:
    explicit DepthExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ptrig

#endif
