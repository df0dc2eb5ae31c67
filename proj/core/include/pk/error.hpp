#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pk {

enum class ErrorKind {
  // notation
  UnknownCharacter,
  UnexpectedToken,
  UnbalancedParenthesis,
  EmptySlot,
  TooManySlots,
  UnsupportedPolyhedron,
  // diagram
  UnknownNode,
  NotAPrecrossing,
  TooManyPrecrossings,
  InvalidDiagram,
  InvalidTemplate,
  // linalg
  IndexOutOfRange,
  NotSquare,
  InvalidModulus,
  EnumerationTooLarge,
  // invariants
  HasPrecrossings,
  UndefinedForPseudodetBelow2,
  // families
  NoPseudotwistAtLocation,
  InvalidFormula,
  InvalidParameters,
  UnknownRow,
};

std::string_view errorKindName(ErrorKind kind) noexcept;

/// All library failures are reported through this exception type.
///
/// `kind` identifies the failure for callers that branch on it (the CLI maps
/// every kind to exit status 1 except usage problems). `position` is set for
/// notation errors and is a 0-based character offset into the source symbol.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace pk
