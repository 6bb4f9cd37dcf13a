#pragma once

#include <stdexcept>
#include <string>

namespace polyem {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input does not hold (dependent
/// vectors, non-lattice cone where a lattice cone is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A subspace met by the recursion is not in the domain of the complement map.
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration would exceed the configured candidate budget.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Exact division of a truncated series by a linear form left a remainder.
class NonDivisibleError : public Error {
 public:
  using Error::Error;
};

/// A meromorphic function expected to be regular at the origin has a pole there.
class GenuinePoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyem
