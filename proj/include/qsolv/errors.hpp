#pragma once

#include <stdexcept>
#include <string>

namespace qsolv {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dividend was not a multiple of the requested divisor.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// Input exceeds an enumeration or memory bound.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Normal-form rewriting did not terminate within its budget.
class FuelExhausted : public Error {
 public:
  using Error::Error;
};

/// An operator was applied outside the subalgebra it is defined on.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// The side conditions of a check cannot be established symbolically.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// An element is not central modulo (q - eps).
class NotCentral : public Error {
 public:
  using Error::Error;
};

/// A character assignment violates a relation among the listed generators.
class InconsistentPoint : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

class NotQCommuting : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid algebra description (sizes, support of relations).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsolv
