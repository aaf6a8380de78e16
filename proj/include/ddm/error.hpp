#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ddm {

enum class ErrorCode {
  EmptyWord,
  IndexOutOfRange,
  EqualAdjacentLetters,
  GradeZeroGenerator,
  NotAntisymmetric,
  InfiniteDimensional,
  StructureViolation,
  NotASimplex,
  UncoveredPoint,
  NotACover,
  TooLarge,
  InvalidSpace,
  InvalidArgument,
  ParseError,
};

/// Stable machine-readable name, e.g. "NotAntisymmetric".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a network relation has i != j with i <= j and j <= i.
class NotAntisymmetricError : public Error {
 public:
  NotAntisymmetricError(std::size_t first, std::size_t second, const std::string& message);

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ddm
