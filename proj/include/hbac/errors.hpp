#pragma once

#include <stdexcept>

namespace hbac {

// Requested register would exceed the configured maximum size (kMaxPopulations).
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

// Integrator step size violates the stability guard dt <= 0.1 / max rate.
struct StepTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Scenario config text failed to parse or validate.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hbac
