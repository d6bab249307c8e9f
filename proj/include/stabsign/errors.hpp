#ifndef STABSIGN_ERRORS_HPP
#define STABSIGN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stabsign {

/// Argument outside the mathematical domain of an operation (excluded angle,
/// non-positive exponent, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An integrator could not certify its answer within the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stabsign

#endif  // STABSIGN_ERRORS_HPP
