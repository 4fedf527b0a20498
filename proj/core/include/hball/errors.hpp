#pragma once

#include <stdexcept>
#include <string>

namespace hball {

// Mismatched vector/point dimensions.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of an operation (point not in the ball, etc.).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Kernel evaluation too close to the singular set <z,w> = 1.
class SingularityError : public std::domain_error {
public:
    SingularityError(const std::string& what, double conditionHint)
        : std::domain_error(what), conditionHint_(conditionHint) {}
    double conditionHint() const { return conditionHint_; }

private:
    double conditionHint_;
};

// Invalid configuration: bad point sets, non-nested ladders, malformed experiment configs.
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation not available for this input (e.g. Taylor data of a non-polynomial symbol).
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Iterative solver failed to converge; carries the best iterate's diagnostics.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double bestResidual, int iterations)
        : std::runtime_error(what), bestResidual_(bestResidual), iterations_(iterations) {}
    double bestResidual() const { return bestResidual_; }
    int iterations() const { return iterations_; }

private:
    double bestResidual_;
    int iterations_;
};

}  // namespace hball
