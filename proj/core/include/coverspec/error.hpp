#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coverspec {

enum class ErrorCode {
  // qarith
  ZeroDenominator,
  ConstantFunction,
  NotMonic,
  DegeneratePoints,
  ParseError,
  DomainError,
  // permgroup
  OrderCapExceeded,
  RankSearchCapExceeded,
  NotPrime,
  NoSuchClass,
  SplitClassAmbiguous,
  InvalidPermutation,
  // classtable
  InconsistentDeclaration,
  TableMismatch,
  // covers / specialize
  NonIntegralGenus,
  NegativeGenus,
  GenusSideConditionViolated,
  InvalidRamificationData,
  DuplicateBranchPoints,
  EmptyRamification,
  GroupDropNotSupported,
  // ret
  SearchCapExceeded,
  // obstruction
  EmptyCatalog,
  UndecidablePair,
  ResidueConditionFails,
  InsufficientDeclaration,
  // twistcore
  RankMismatch,
  TargetMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace coverspec
