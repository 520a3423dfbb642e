#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eisencoh {

enum class ErrorCode {
  ParseError,
  InvalidPermutation,
  InvalidBlockPair,
  NotDominant,
  NotRegular,
  NotSelfDual,
  NotHalfIntegral,
  ParityViolation,
  MiddleNonzero,
  NoPairAboveMiddle,
  ShiftNotHalfIntegral,
  NotSuccessiveCritical,
  InvalidConfig,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InvalidBlockPair: return "InvalidBlockPair";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotSelfDual: return "NotSelfDual";
    case ErrorCode::NotHalfIntegral: return "NotHalfIntegral";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::MiddleNonzero: return "MiddleNonzero";
    case ErrorCode::NoPairAboveMiddle: return "NoPairAboveMiddle";
    case ErrorCode::ShiftNotHalfIntegral: return "ShiftNotHalfIntegral";
    case ErrorCode::NotSuccessiveCritical: return "NotSuccessiveCritical";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

/// Every failure raised by the library. `index()` carries the 1-based
/// offending position for per-entry validation failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace eisencoh
