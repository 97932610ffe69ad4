#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posetpoly {

// Base of every error the library throws. The C API maps each subclass to a
// status code, see capi.cpp.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class DuplicateLabelError : public Error {
 public:
  using Error::Error;
};

class UnknownLabelError : public Error {
 public:
  using Error::Error;
};

// Poset beyond 64 elements, or a vertex list beyond the bitset cap.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

class InfeasibleVertexError : public Error {
 public:
  InfeasibleVertexError(std::size_t vertex, std::size_t row)
      : Error("vertex " + std::to_string(vertex) + " violates row " +
              std::to_string(row)),
        vertex_(vertex),
        row_(row) {}
  std::size_t vertex() const { return vertex_; }
  std::size_t row() const { return row_; }

 private:
  std::size_t vertex_;
  std::size_t row_;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class NotFullDimensionalError : public Error {
 public:
  using Error::Error;
};

class NotAVertexError : public Error {
 public:
  using Error::Error;
};

class OriginNotVertexError : public Error {
 public:
  using Error::Error;
};

class ConstantTermError : public Error {
 public:
  using Error::Error;
};

// Checked subtraction in N[x] produced a negative coefficient.
class NegativeCoefficientError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class LeafTooLargeError : public Error {
 public:
  using Error::Error;
};

class NotInFamilyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class UnboundRefError : public ParseError {
 public:
  using ParseError::ParseError;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace posetpoly
