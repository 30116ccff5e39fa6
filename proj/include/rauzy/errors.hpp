#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rauzy {

/// Raised when an argument violates a documented precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix or vector shapes that cannot be combined.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The Rauzy map is undefined on the hyperplane lambda_n == lambda^pi_n.
/// `step()` is the 0-based index of the step that hit the tie.
class BoundaryError : public std::runtime_error {
 public:
  BoundaryError(const std::string& what, std::size_t step)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// An orbit point landed exactly on an interior breakpoint of an exchange.
class BreakpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A first-return iteration did not re-enter the cut within the cap.
class IterationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rauzy
