#pragma once
#include <stdexcept>
#include <string>

namespace curvefold {

// Every geometric precondition failure carries one of these codes so that
// callers (and the CLI exit path) can react without parsing messages.
enum class ErrorCode {
  DegenerateCurve,
  VanishingCurvature,
  NonOrthonormalFrame,
  NonPositiveKappa,
  IntegrationFailure,
  SelfIntersectingCurve,
  AlphaOutOfRange,
  SelfIntersectingMesh,
  IncompatibleCurve,
  UnsupportedSignChange,
  NotAdmissible,
  TorusDomain,
  NotClosed,
  NotInterval,
  CircleCrease,
  PlanarCurve,
  PreconditionFailed,
  NegativeDiscriminant,
  InvalidConfig,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::VanishingCurvature: return "VanishingCurvature";
    case ErrorCode::NonOrthonormalFrame: return "NonOrthonormalFrame";
    case ErrorCode::NonPositiveKappa: return "NonPositiveKappa";
    case ErrorCode::IntegrationFailure: return "IntegrationFailure";
    case ErrorCode::SelfIntersectingCurve: return "SelfIntersectingCurve";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::SelfIntersectingMesh: return "SelfIntersectingMesh";
    case ErrorCode::IncompatibleCurve: return "IncompatibleCurve";
    case ErrorCode::UnsupportedSignChange: return "UnsupportedSignChange";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::TorusDomain: return "TorusDomain";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotInterval: return "NotInterval";
    case ErrorCode::CircleCrease: return "CircleCrease";
    case ErrorCode::PlanarCurve: return "PlanarCurve";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

class GeomError : public std::runtime_error {
 public:
  GeomError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw GeomError(code, what);
}

}  // namespace curvefold
