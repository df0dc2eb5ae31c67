#include "pk/error.hpp"

namespace pk {

std::string_view errorKindName(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownCharacter: return "UnknownCharacter";
    case ErrorKind::UnexpectedToken: return "UnexpectedToken";
    case ErrorKind::UnbalancedParenthesis: return "UnbalancedParenthesis";
    case ErrorKind::EmptySlot: return "EmptySlot";
    case ErrorKind::TooManySlots: return "TooManySlots";
    case ErrorKind::UnsupportedPolyhedron: return "UnsupportedPolyhedron";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::NotAPrecrossing: return "NotAPrecrossing";
    case ErrorKind::TooManyPrecrossings: return "TooManyPrecrossings";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::InvalidTemplate: return "InvalidTemplate";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::HasPrecrossings: return "HasPrecrossings";
    case ErrorKind::UndefinedForPseudodetBelow2: return "UndefinedForPseudodetBelow2";
    case ErrorKind::NoPseudotwistAtLocation: return "NoPseudotwistAtLocation";
    case ErrorKind::InvalidFormula: return "InvalidFormula";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::UnknownRow: return "UnknownRow";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> position) {
  std::string out(errorKindName(kind));
  if (position) out += " at " + std::to_string(*position);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(decorate(kind, message, position)),
      kind_(kind),
      position_(position) {}

}  // namespace pk
