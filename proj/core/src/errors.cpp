#include "serrewt/errors.hpp"

namespace serrewt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::RecurrenceViolation: return "RecurrenceViolation";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::NonIntegralAlpha: return "NonIntegralAlpha";
    case ErrorKind::InconsistentInvariants: return "InconsistentInvariants";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::UnreachableUnramifiedPart: return "UnreachableUnramifiedPart";
    case ErrorKind::EmptyModelSet: return "EmptyModelSet";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::IllegalFlag: return "IllegalFlag";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace serrewt
