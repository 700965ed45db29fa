#pragma once

#include <stdexcept>
#include <string>

namespace serrewt {

enum class ErrorKind {
  InvalidArgument,
  NotPrime,
  CharacteristicTwo,
  WrongOrder,
  RecurrenceViolation,
  RangeViolation,
  NonIntegralAlpha,
  InconsistentInvariants,
  PreconditionViolation,
  UnreachableUnramifiedPart,
  EmptyModelSet,
  HypothesisViolation,
  NotGeneric,
  IllegalFlag,
  SizeLimit,
  NonIntegralMultiplicity,
  InternalInconsistency,
};

const char* to_string(ErrorKind kind);

// Domain errors carry a kind so callers (and the CLI) can map them to exit
// codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

// Invariant check that signals an implementation bug rather than bad input.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InternalInconsistency, what);
}

}  // namespace serrewt
