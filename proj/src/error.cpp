#include "ddm/error.hpp"

namespace ddm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EqualAdjacentLetters: return "EqualAdjacentLetters";
    case ErrorCode::GradeZeroGenerator: return "GradeZeroGenerator";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::NotASimplex: return "NotASimplex";
    case ErrorCode::UncoveredPoint: return "UncoveredPoint";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

NotAntisymmetricError::NotAntisymmetricError(std::size_t first, std::size_t second,
                                             const std::string& message)
    : Error(ErrorCode::NotAntisymmetric, message), first_(first), second_(second) {}

namespace {

std::string located(const std::string& source, std::size_t line, std::size_t column,
                    const std::string& what) {
  return source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what;
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       const std::string& what)
    : Error(ErrorCode::ParseError, located(source, line, column, what)),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

}  // namespace ddm
