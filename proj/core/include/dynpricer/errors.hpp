#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dynpricer {

// Dimension mismatches, out-of-range parameters, malformed inputs.
// Reported as std::invalid_argument so callers can catch the standard type.
[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw std::invalid_argument(what);
}

// Shrinking a feasible set left an empty interval on some coordinate.
class InfeasibleShrinkError : public std::runtime_error {
 public:
  InfeasibleShrinkError(std::size_t coordinate, const std::string& what)
      : std::runtime_error(what), coordinate_(coordinate) {}
  std::size_t coordinate() const { return coordinate_; }

 private:
  std::size_t coordinate_;
};

// An iterative solver hit its iteration cap; carries the residual it reached.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(double residual, const std::string& what)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// A target bundle with a non-positive coordinate cannot be induced by any
// bounded price vector.
class NotInducibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A descent callback broke the norm bound it promised (gradient beyond G,
// perturbation beyond E, or an iterate left the domain).
class BoundViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A valuation gradient was requested where it is unbounded.
class SingularGradientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dynpricer
