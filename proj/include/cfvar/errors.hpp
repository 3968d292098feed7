#ifndef CFVAR_ERRORS_HPP
#define CFVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cfvar {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method did not reach the requested accuracy within its budget.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested precision exceeds what a stored or budgeted source can deliver.
class PrecisionUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural problem with a continued fraction, recurrence or catalog entry.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that could not be parsed (expressions, rationals, catalog files).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cfvar

#endif  // CFVAR_ERRORS_HPP
