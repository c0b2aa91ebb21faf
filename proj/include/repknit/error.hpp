#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace repknit {

enum class ErrorCode {
  InvalidQuiver,
  HeightMismatch,
  WindowTooSmall,
  AmbiguousProjectiveInsertion,
  AmbiguousIdentification,
  NotDominant,
  WSupportNotProjective,
  CapExceeded,
  CoverNotSurjective,
  ArithmeticOverflow,
  ConfigError,
  InternalInconsistency,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidQuiver: return "InvalidQuiver";
    case ErrorCode::HeightMismatch: return "HeightMismatch";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::AmbiguousProjectiveInsertion: return "AmbiguousProjectiveInsertion";
    case ErrorCode::AmbiguousIdentification: return "AmbiguousIdentification";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::WSupportNotProjective: return "WSupportNotProjective";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::CoverNotSurjective: return "CoverNotSurjective";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library. `module()` names the component that
/// raised it, `what()` carries the slot / vertex / field involved.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + " [" + module + "]: " + detail),
        code_(code),
        module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace repknit
