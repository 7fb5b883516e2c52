#include "monoidp/error.hpp"

namespace monoidp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::NonCoprimeGenerators: return "NonCoprimeGenerators";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::ZeroVectorGenerator: return "ZeroVectorGenerator";
    case ErrorCode::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::TooManyGenerators: return "TooManyGenerators";
    case ErrorCode::InvalidGluing: return "InvalidGluing";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotEmbeddingDimension3: return "NotEmbeddingDimension3";
    case ErrorCode::UnsupportedX: return "UnsupportedX";
    case ErrorCode::NotMED: return "NotMED";
    case ErrorCode::NotInTheoremScope: return "NotInTheoremScope";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

}  // namespace monoidp
