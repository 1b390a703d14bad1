#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ultrashift {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Caller broke a documented contract (mismatched universes, bad arguments).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Unknown edge or vertex.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Operation applied outside its domain (theta outside X_{g^{-1}}, the
// membership characterization inapplicable, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Index literal exceeds the machine representation.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Text input rejected; carries a position when one makes sense.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& reason) : Error(reason), line_(0), column_(0) {}
  ParseError(std::size_t line, std::size_t column, const std::string& reason)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class KTheoryError : public Error {
 public:
  using Error::Error;
};

// Tail range rule that K-theory has no finite model for (uppertail).
class TailNotSupportedError : public KTheoryError {
 public:
  using KTheoryError::KTheoryError;
};

// The three consecutive truncations disagreed all the way up to n_max.
class NotStabilizedError : public KTheoryError {
 public:
  using KTheoryError::KTheoryError;
};

// coker(boundary) is not a finitely generated group (infinitely many sinks).
class NotFinitelyGeneratedError : public KTheoryError {
 public:
  using KTheoryError::KTheoryError;
};

}  // namespace ultrashift
