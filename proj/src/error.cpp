#include "ldm/error.hpp"

namespace ldm {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NoSuchRoot: return "NoSuchRoot";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::CoincidentArguments: return "CoincidentArguments";
    case Errc::FewerThanTwoDistinct: return "FewerThanTwoDistinct";
    case Errc::CenterOnPlane: return "CenterOnPlane";
    case Errc::ProjectingCenter: return "ProjectingCenter";
    case Errc::CharTwoUnsupported: return "CharTwoUnsupported";
    case Errc::NotLatin: return "NotLatin";
    case Errc::BadParameters: return "BadParameters";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::IncompleteRow: return "IncompleteRow";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::LabelNotOnLine: return "LabelNotOnLine";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NotAGroupLabel: return "NotAGroupLabel";
    case Errc::BadK: return "BadK";
    case Errc::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case Errc::SamplingExhausted: return "SamplingExhausted";
    case Errc::FormatError: return "FormatError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace ldm
