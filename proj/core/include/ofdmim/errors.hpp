#pragma once

#include <stdexcept>
#include <string>

namespace ofdmim {

// Invalid system or sweep configuration (bad N/K/M, unsupported sizes, ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation was violated by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Partial-fraction poles are duplicated or too close to separate numerically.
// Callers that need a value anyway should integrate instead (pep_quadrature).
class DegeneratePoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Adaptive quadrature ran out of depth before reaching the requested
// tolerance. Carries the best estimate obtained so far.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

// Report emission failed (unwritable path, ...).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ofdmim
