#pragma once

#include <stdexcept>
#include <string>

namespace detlinks {

/// Parameters outside the domain of an operation (bad ranges, mismatched specs).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request the mathematics does not cover, e.g. Betti numbers
/// of a link that is not smooth at the requested codimension.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal cross-check failed (sign pattern, duality, exact division).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace detlinks
