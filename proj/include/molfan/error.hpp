#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace molfan {

enum class ErrorCode {
  NonFinite,
  ZeroVector,
  InvalidInterval,
  InvalidSystem,
  EmptyRegion,
  UnboundedRegion,
  IndexOutOfRange,
  NotAPolygon,
  ZeroForm,
  NonAdjacentTie,
  Infeasible,
  Unbounded,
  InfeasibleCandidate,
  ParseError,
  SchemaError,
  IoError,
};

/// Stable machine-parsable tag for an error code, used as the CLI error prefix.
inline constexpr std::string_view error_tag(ErrorCode code) noexcept
{
  switch (code) {
    case ErrorCode::NonFinite: return "E_NONFINITE";
    case ErrorCode::ZeroVector: return "E_ZEROVECTOR";
    case ErrorCode::InvalidInterval: return "E_INTERVAL";
    case ErrorCode::InvalidSystem: return "E_SYSTEM";
    case ErrorCode::EmptyRegion: return "E_EMPTY";
    case ErrorCode::UnboundedRegion: return "E_UNBOUNDED";
    case ErrorCode::IndexOutOfRange: return "E_INDEX";
    case ErrorCode::NotAPolygon: return "E_NOTPOLYGON";
    case ErrorCode::ZeroForm: return "E_ZEROFORM";
    case ErrorCode::NonAdjacentTie: return "E_TIE";
    case ErrorCode::Infeasible: return "E_EMPTY";
    case ErrorCode::Unbounded: return "E_UNBOUNDED";
    case ErrorCode::InfeasibleCandidate: return "E_CANDIDATE";
    case ErrorCode::ParseError: return "E_PARSE";
    case ErrorCode::SchemaError: return "E_SCHEMA";
    case ErrorCode::IoError: return "E_IO";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string & what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace molfan
