#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial division left a nonzero remainder.
class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Binary operation on classes of curves with different genus.
class GenusMismatch : public Error {
 public:
  using Error::Error;
};

/// A closed formula was evaluated outside the parameter range where it holds.
/// The message names the violated inequality.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class InvalidChamber : public Error {
 public:
  using Error::Error;
};

/// Stability parameter sits exactly on a wall.
class OnWall : public Error {
 public:
  using Error::Error;
};

/// Stability parameter outside (0, e/2].
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Degree not coprime to the rank.
class InvalidDegree : public Error {
 public:
  using Error::Error;
};

/// Closed-form chamber index disagrees with the chamber of the exact
/// stability parameter.
class ChamberMismatch : public Error {
 public:
  using Error::Error;
};

/// A class that must be effective has a negative coefficient.
class NotEffective : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace motivic
