#include "sl3web/errors.hpp"

namespace sl3web {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NotInLambda: return "NotInLambda";
    case ErrorKind::ImageViolation: return "ImageViolation";
    case ErrorKind::WordMismatch: return "WordMismatch";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::DanglingSide: return "DanglingSide";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BadGenus: return "BadGenus";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::NotInTheta: return "NotInTheta";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::CounterexampleFound: return "CounterexampleFound";
    case ErrorKind::BoxTooLarge: return "BoxTooLarge";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Malformed: return "Malformed";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail) {
  std::string out(to_string(kind));
  if (!detail.empty()) {
    out += ": ";
    out += detail;
  }
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string detail, std::string field)
    : std::runtime_error(compose(kind, detail)),
      kind_(kind),
      field_(std::move(field)),
      detail_(std::move(detail)) {}

}  // namespace sl3web
