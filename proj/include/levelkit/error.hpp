#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace levelkit {

enum class ErrorKind {
  EmptyComplex,
  UnknownVertex,
  DuplicateVertex,
  UncoveredVertex,
  TooManyVertices,
  NotAFacet,
  TooManyFacets,
  InvalidGraph,
  BadExponent,
  VariableCountMismatch,
  CollapsedToEmpty,
  BoxTooLarge,
  DegreeTooLarge,
  SingleFacet,
  SingletonFacet,
  NotPure,
  NotDisjoint,
  NotForest,
  TooSmall,
  Overflow,
  StrategyInapplicable,
  ParseError,
};

/// Stable name used in diagnostics and CLI error reports.
std::string_view to_string(ErrorKind kind) noexcept;

/// Every contract violation raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace levelkit
