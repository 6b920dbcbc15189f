#pragma once

#include <stdexcept>
#include <string>

namespace szego {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition (bad curve, bad config, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

class BracketFailure : public Error {
public:
  using Error::Error;
};

/// The polynomial has non-positive leading coefficient or odd degree.
class NonCoercive : public Error {
public:
  using Error::Error;
};

class NotMonotone : public Error {
public:
  using Error::Error;
};

/// A numerical result contradicts a proven identity; never swallowed.
class Inconsistent : public Error {
public:
  using Error::Error;
};

class NotInConvergenceRegion : public Error {
public:
  using Error::Error;
};

class WrongCase : public Error {
public:
  using Error::Error;
};

class NotSingularPair : public Error {
public:
  using Error::Error;
};

/// Tolerances shared by every quadrature-backed operation. Passed by value;
/// there is no global configuration.
struct NumericConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  /// Integrands are truncated where the exponent exceeds this value.
  double exponent_cutoff = 40.0;
  int max_subdivisions = 60;

  void validate() const {
    if (!(rel_tol > 0.0))
      throw InvalidArgument("numeric.rel_tol must be > 0");
    if (!(abs_tol > 0.0))
      throw InvalidArgument("numeric.abs_tol must be > 0");
    if (!(exponent_cutoff >= 20.0))
      throw InvalidArgument("numeric.exponent_cutoff must be >= 20");
    if (max_subdivisions <= 0)
      throw InvalidArgument("numeric.max_subdivisions must be > 0");
  }
};

} // namespace szego
