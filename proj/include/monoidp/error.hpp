#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monoidp {

enum class ErrorCode {
  EmptyInput,
  ZeroGenerator,
  NegativeValue,
  NonCoprimeGenerators,
  NotAMember,
  ZeroVectorGenerator,
  DuplicateGenerator,
  DimensionMismatch,
  BoundTooSmall,
  TooManyGenerators,
  InvalidGluing,
  InvalidParams,
  NotEmbeddingDimension3,
  UnsupportedX,
  NotMED,
  NotInTheoremScope,
  ArithmeticOverflow,
  ResourceLimit,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        _code(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return _code; }

  // Input errors map to CLI exit code 2, everything else to 1.
  [[nodiscard]] bool is_input_error() const noexcept {
    return _code != ErrorCode::ArithmeticOverflow
           && _code != ErrorCode::TooManyGenerators
           && _code != ErrorCode::ResourceLimit;
  }

 private:
  ErrorCode _code;
};

}  // namespace monoidp
