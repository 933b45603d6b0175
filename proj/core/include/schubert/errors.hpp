#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (permutations, clans, words, group names).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A well-formed value that violates an operation's precondition:
/// rank or type mismatch, invalid group element, pattern present, and so on.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The combinatorial rule does not cover the requested input. This is not a
/// claim that the answer is zero.
class UnsupportedPair : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace schubert
