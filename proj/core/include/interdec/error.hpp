#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace interdec {

enum class ErrorCode {
  DuplicateLabel,
  UnknownLabel,
  CycleDetected,
  UnknownElement,
  CapExceeded,
  NotComparable,
  DimensionMismatch,
  NotContained,
  NotMonotone,
  NotMonotoneMap,
  VectorOutsideArrangement,
  InternalContradiction,
  EmptyVariableDomain,
  SizeLimitExceeded,
  UnknownVariable,
  FieldMismatch,
  InvalidField,
  Uncertified,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure the library raises carries one of the codes above so that
// front ends can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace interdec
