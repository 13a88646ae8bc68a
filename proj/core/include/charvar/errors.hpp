#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document or token.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a domain precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A character violating the product-one constraint of the projective torus.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Projection is not generic (vertical line or two vertices over one abscissa).
class DegenerateProjection : public Error {
 public:
  using Error::Error;
};

/// An internal model failed its own invariants.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The cohomology oracle contradicts a structural prediction.
class OracleDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace charvar
