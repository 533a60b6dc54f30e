#pragma once

#include <stdexcept>
#include <string>

namespace vacuum {

/// Argument outside the domain where a formula is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Particle-table document failed schema or invariant checks.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Root bracket without a sign change.
class BracketingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Oscillatory integral whose partial sums are not shrinking.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation at the k = 0 Coulomb pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Tolerance not reached within the evaluation budget. Carries the best
/// estimate available when the budget ran out.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double best_value, double best_error)
        : std::runtime_error(what), best_value_(best_value), best_error_(best_error) {}

    double best_value() const noexcept { return best_value_; }
    double best_error() const noexcept { return best_error_; }

private:
    double best_value_;
    double best_error_;
};

}  // namespace vacuum
