#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latgeom {

enum class ErrorCode {
  MixedRadicand,
  DivisionByZero,
  IrrationalInput,
  Degenerate,
  OriginNotInterior,
  NotUnimodular,
  RadiusTooSmall,
  NotTriangleOrQuad,
  SingularParams,
  DegenerateFrame,
  NotSymmetric,
  AlphaOutOfRange,
  EpsTooSmall,
  NotTilingParallelogram,
  SearchExhausted,
  WidthOutOfRange,
  RatioOutOfRange,
  ParamOutOfRange,
  CertificationFailed,
  InvalidInput,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI reports `error_name(code())` and exits with status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latgeom
