#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gls {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural problems with an input grid. The message is stable and is what
// the CLI prints, e.g. "RowDuplicate row 1 symbol 1" (1-based).
class ValidationError : public Error {
 public:
  enum class Kind { NotSquare, NegativeSymbol, RowDuplicate, ColDuplicate };

  ValidationError(Kind kind, int index, std::int64_t symbol, const std::string& what)
      : Error(what), kind_(kind), index_(index), symbol_(symbol) {}

  Kind kind() const { return kind_; }
  // 0-based row or column for the duplicate kinds, offending row otherwise.
  int index() const { return index_; }
  std::int64_t symbol() const { return symbol_; }

 private:
  Kind kind_;
  int index_;
  std::int64_t symbol_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// A step that a proof guarantees did not go through. Always a bug.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NotRegular : public Error {
 public:
  using Error::Error;
};

class NotProper : public Error {
 public:
  using Error::Error;
};

class DegenerateExtraction : public Error {
 public:
  using Error::Error;
};

class InfeasibleParams : public Error {
 public:
  using Error::Error;
};

class OddVertices : public Error {
 public:
  using Error::Error;
};

}  // namespace gls

#define GLS_ENSURE(cond, msg)                                                                  \
  do {                                                                                         \
    if (!(cond)) throw ::gls::AssertionFailure(std::string(msg) + " [" #cond "]");             \
  } while (false)
