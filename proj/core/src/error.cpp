#include "coverspec/error.hpp"

namespace coverspec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ConstantFunction: return "ConstantFunction";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegeneratePoints: return "DegeneratePoints";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::RankSearchCapExceeded: return "RankSearchCapExceeded";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NoSuchClass: return "NoSuchClass";
    case ErrorCode::SplitClassAmbiguous: return "SplitClassAmbiguous";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InconsistentDeclaration: return "InconsistentDeclaration";
    case ErrorCode::TableMismatch: return "TableMismatch";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::GenusSideConditionViolated: return "GenusSideConditionViolated";
    case ErrorCode::InvalidRamificationData: return "InvalidRamificationData";
    case ErrorCode::DuplicateBranchPoints: return "DuplicateBranchPoints";
    case ErrorCode::EmptyRamification: return "EmptyRamification";
    case ErrorCode::GroupDropNotSupported: return "GroupDropNotSupported";
    case ErrorCode::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::EmptyCatalog: return "EmptyCatalog";
    case ErrorCode::UndecidablePair: return "UndecidablePair";
    case ErrorCode::ResidueConditionFails: return "ResidueConditionFails";
    case ErrorCode::InsufficientDeclaration: return "InsufficientDeclaration";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::TargetMismatch: return "TargetMismatch";
  }
  return "Unknown";
}

}  // namespace coverspec
