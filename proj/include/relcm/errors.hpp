#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relcm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad text, mismatched shapes, mixed degrees.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError(what + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class NotBihomogeneous : public InputError {
 public:
  using InputError::InputError;
};

class DegreeInconsistent : public InputError {
 public:
  DegreeInconsistent(const std::string& what, std::size_t column)
      : InputError(what), column_(column) {}

  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class ShapeMismatch : public InputError {
 public:
  using InputError::InputError;
};

// An ideal generator uses variables of the wrong block.
class MixedVariables : public InputError {
 public:
  using InputError::InputError;
};

// A mathematical precondition of an operation does not hold for its input.
class MathError : public Error {
 public:
  using Error::Error;
};

class ZeroModule : public MathError {
 public:
  ZeroModule() : MathError("module is zero") {}
  explicit ZeroModule(const std::string& what) : MathError(what) {}
};

class NotRelativeCM : public MathError {
 public:
  using MathError::MathError;
};

class NotCohenMacaulay : public MathError {
 public:
  using MathError::MathError;
};

class SearchExhausted : public MathError {
 public:
  using MathError::MathError;
};

class PreconditionViolation : public MathError {
 public:
  using MathError::MathError;
};

// An invariant guaranteed by the theory failed; indicates an engine bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace relcm
