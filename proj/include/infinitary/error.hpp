#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace infinitary {

enum class ErrorCode {
  UnknownAtom,
  SignatureTooLarge,
  AtomLimitExceeded,
  EmptyFamily,
  PreconditionViolated,
  NotTautological,
  UnknownTheoremName,
  SizeOutOfRange,
  NoConstants,
  UnsafeVariable,
  SyntaxError,
  InvalidArgument,
  IOError,
  Internal,
};

std::string_view errorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the CLI
// maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace infinitary
