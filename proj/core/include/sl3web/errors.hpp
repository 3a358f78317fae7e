#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl3web {

enum class ErrorKind {
  ConstraintViolation,
  NonIntegral,
  NotInLambda,
  ImageViolation,
  WordMismatch,
  CountMismatch,
  DanglingSide,
  Disconnected,
  BadGenus,
  InvalidDescriptor,
  NotInTheta,
  LengthMismatch,
  CounterexampleFound,
  BoxTooLarge,
  Overflow,
  Malformed,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind. `field`
// names the offending coordinate when there is one (e.g. "x11" for a
// non-integral inverse), otherwise it is empty.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail, std::string field = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& field() const noexcept { return field_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string field_;
  std::string detail_;
};

}  // namespace sl3web
