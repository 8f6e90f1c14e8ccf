#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gallai {

enum class ErrorCode {
  InvalidArgument,
  LoopEdge,
  VertexOutOfRange,
  MalformedHeader,
  TruncatedBitVector,
  InvalidCharacter,
  TrailingData,
  ParseError,
  SizeLimitExceeded,
  BudgetExceeded,
  PathCapExceeded,
  TupleSpaceExceeded,
  DisconnectedInput,
  PairwiseDisjoint,
  EmptyIntersection,
  InvalidCombParameters,
  CliqueEnumerationBudget,
  NotInClass,
  NotApplicable,
  CertificationFailed,
  UnknownFixture,
  UnknownPattern,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gallai
