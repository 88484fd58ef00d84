#pragma once

#include <stdexcept>

namespace reeslab {

/// Malformed or out-of-contract input (bad spec text, mismatched variable
/// counts, violated constructor side conditions).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation needs a finite-dimensional quotient.
class NotArtinianError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A theorem hypothesis required by a certificate does not hold.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive oracle refused because the instance is too large.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace reeslab
