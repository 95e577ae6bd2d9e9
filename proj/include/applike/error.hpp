#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace applike {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A field list ran out (or had fields left over) where an operator needed
// a specific count.
class ArityError : public Error {
 public:
  ArityError(std::string op, std::size_t remaining, std::string detail = {})
      : Error(op + ": arity error (remaining " + std::to_string(remaining) + ")" +
              (detail.empty() ? std::string{} : ": " + detail)),
        op_(std::move(op)),
        remaining_(remaining) {}

  const std::string& op() const noexcept { return op_; }
  std::size_t remaining() const noexcept { return remaining_; }

 private:
  std::string op_;
  std::size_t remaining_;
};

class FieldTypeError : public Error {
 public:
  using Error::Error;
};

class UnknownType : public Error {
 public:
  explicit UnknownType(const std::string& name) : Error("unknown record type '" + name + "'") {}
};

// Accumulator of a pipeline state was not of the kind the step expected
// (e.g. a show step run over a Builder).
class StateError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

// A continuation-passing value was fed the wrong number of arguments, or a
// non-function was applied. Distinct from ArityError: this is mis-nesting,
// not exhausted fields. Counts are -1 when not meaningful.
class ContinuationShapeError : public Error {
 public:
  ContinuationShapeError(const std::string& what, long expected, long actual)
      : Error("continuation shape: " + what + " (expected " + std::to_string(expected) +
              ", actual " + std::to_string(actual) + ")"),
        expected_(expected),
        actual_(actual) {}

  long expected() const noexcept { return expected_; }
  long actual() const noexcept { return actual_; }

 private:
  long expected_;
  long actual_;
};

class ExhaustedError : public Error {
 public:
  using Error::Error;
};

class PortsOpenError : public Error {
 public:
  using Error::Error;
};

class PieceKindError : public Error {
 public:
  using Error::Error;
};

enum class CodecErrc {
  exhausted,
  bad_lexeme,
  out_of_range,
  trailing_input,
  truncated,
  invalid_bool,
  trailing_bytes,
  invalid_utf8,
  string_too_long,
  unsupported_kind,
  invalid_lexeme,
  malformed_json,
  missing_key,
  extra_key,
  wrong_value_kind,
  not_an_object,
  invalid_hex,
};

const char* to_string(CodecErrc code) noexcept;

class CodecError : public Error {
 public:
  CodecError(CodecErrc code, const std::string& message, std::size_t position)
      : Error(std::string(to_string(code)) + " at " + std::to_string(position) + ": " + message),
        code_(code),
        position_(position) {}

  CodecErrc code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }

 private:
  CodecErrc code_;
  std::size_t position_;
};

}  // namespace applike
