#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylccr {

/// Error categories raised by the core library. The C API maps each one to
/// a stable integer code.
enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  FrameMismatch,
  SingularFrame,
  NotDecomposable,
  NotAState,
  WindowTooSmall,
  OutOfSubalgebra,
  InvalidProbeSet,
  Unsupported,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace weylccr
