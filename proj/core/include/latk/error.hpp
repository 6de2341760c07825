#pragma once

#include <stdexcept>
#include <string>

namespace latk {

enum class ErrorCode {
  InvalidInput,
  Parse,
  EmptyLattice,
  EmptyModule,
  NotPointed,
  AlreadyPointed,
  NotFullDimensional,
  NotPositive,
  NotGraded,
  NonPositiveDegree,
  SingularSimplex,
  InexactDivision,
  ArithmeticOverflow,
  Io,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace latk
