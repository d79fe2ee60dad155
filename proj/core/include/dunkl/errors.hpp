#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied arguments outside an operation's contract.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A point lies on (or numerically too close to) a reflection hyperplane.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed. Indicates a bug.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

/// An improper integral does not converge.
class Divergence : public Error {
 public:
  using Error::Error;
};

/// A quotient has a vanishing denominator.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

}  // namespace dunkl
