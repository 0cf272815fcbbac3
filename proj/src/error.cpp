#include "orbitslice/error.hpp"

namespace orbitslice {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnbalancedLabel: return "UnbalancedLabel";
    case ErrorCode::BadToken: return "BadToken";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::BadJson: return "BadJson";
    case ErrorCode::IllFormedCompletion: return "IllFormedCompletion";
    case ErrorCode::MixedSignature: return "MixedSignature";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::NonConstantDeterminant: return "NonConstantDeterminant";
    case ErrorCode::NonVanishingAtOrigin: return "NonVanishingAtOrigin";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PositionMapMismatch: return "PositionMapMismatch";
  }
  return "Unknown";
}

}  // namespace orbitslice
