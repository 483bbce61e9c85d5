#pragma once

#include <stdexcept>
#include <string>

namespace boxpot {

/// A reflected extension argument left the source interval. Callers must
/// shrink the collar (r h sqrt(D)) or pick smaller reflection rates.
class OutOfReachError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An oracle missed its accuracy target within the node budget; carries the
/// achieved error estimate.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

/// The Hestenes system is singular (repeated rates) or too ill-conditioned
/// to meet the residual bound.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run specification; the message names the violated invariant.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace boxpot
