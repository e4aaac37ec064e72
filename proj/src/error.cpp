#include "levelkit/error.hpp"

namespace levelkit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyComplex: return "EmptyComplex";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UncoveredVertex: return "UncoveredVertex";
    case ErrorKind::TooManyVertices: return "TooManyVertices";
    case ErrorKind::NotAFacet: return "NotAFacet";
    case ErrorKind::TooManyFacets: return "TooManyFacets";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorKind::CollapsedToEmpty: return "CollapsedToEmpty";
    case ErrorKind::BoxTooLarge: return "BoxTooLarge";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::SingleFacet: return "SingleFacet";
    case ErrorKind::SingletonFacet: return "SingletonFacet";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NotForest: return "NotForest";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::StrategyInapplicable: return "StrategyInapplicable";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace levelkit
