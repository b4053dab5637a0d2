#include "triality/error.hpp"

namespace triality {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ScalarModeMismatch: return "ScalarModeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IsotropicVector: return "IsotropicVector";
    case ErrorCode::NotASimilitude: return "NotASimilitude";
    case ErrorCode::InvalidTriple: return "InvalidTriple";
    case ErrorCode::NonSquareSpinorNorm: return "NonSquareSpinorNorm";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::WrongRank: return "WrongRank";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::DeterminantMismatch: return "DeterminantMismatch";
    case ErrorCode::NeedsHalfPowerMode: return "NeedsHalfPowerMode";
    case ErrorCode::NotPGSp6Param: return "NotPGSp6Param";
    case ErrorCode::WeightConstraintViolated: return "WeightConstraintViolated";
    case ErrorCode::MissingSatakeData: return "MissingSatakeData";
    case ErrorCode::ShapeInvalid: return "ShapeInvalid";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::CentralCharacterMismatch: return "CentralCharacterMismatch";
    case ErrorCode::NotG2Type: return "NotG2Type";
    case ErrorCode::PoleAt: return "PoleAt";
    case ErrorCode::MissingSelfdualType: return "MissingSelfdualType";
    case ErrorCode::MissingRootNumber: return "MissingRootNumber";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

bool is_parse_error(ErrorCode code) {
  return code == ErrorCode::ParseError || code == ErrorCode::UnknownCommand;
}

}  // namespace triality
