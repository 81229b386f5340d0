#pragma once

#include <stdexcept>
#include <string>

namespace frames {

/// Parameters that violate a type invariant (d < 1, n < 2, bad prime, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A stratum index or matrix outside the region an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Hypotheses of a construction are not met by the supplied frame.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A randomized search ran out of retries. Reseeding usually fixes it.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace frames
