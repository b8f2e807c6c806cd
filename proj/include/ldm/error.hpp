#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ldm {

/// Every failure the library reports. The CLI prints these names verbatim.
enum class Errc {
  NotPrime,
  DivisionByZero,
  MixedFields,
  NoSuchRoot,
  ZeroVector,
  CoincidentArguments,
  FewerThanTwoDistinct,
  CenterOnPlane,
  ProjectingCenter,
  CharTwoUnsupported,
  NotLatin,
  BadParameters,
  NotAGroup,
  CapExceeded,
  IncompleteRow,
  InvariantViolation,
  LabelNotOnLine,
  NotASubgroup,
  NotAGroupLabel,
  BadK,
  CharacteristicTooSmall,
  SamplingExhausted,
  FormatError,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  Errc code_;
};

}  // namespace ldm
