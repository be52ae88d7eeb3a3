#pragma once

#include <stdexcept>
#include <string>

namespace qdiscord {

enum class ErrorKind {
  NotHermitian,
  NotUnitTrace,
  NotPSD,
  DimMismatch,
  BadSubsystemIndex,
  InvalidState,
  NotUnitary,
  NotPure,
  InvalidArgument,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qdiscord
