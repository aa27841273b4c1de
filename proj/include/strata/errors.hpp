#pragma once

#include <stdexcept>
#include <string>

namespace strata {

/// Contract violation in inputs or configuration (bad dimensions, malformed
/// config, solvability preconditions). The CLI maps this to exit code 1.
class InvalidInput : public std::runtime_error {
  public:
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical breakdown during a run (blow-up, CFL violation, non-finite
/// values). The CLI maps this to exit code 2.
class NumericalFailure : public std::runtime_error {
  public:
    explicit NumericalFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace strata
