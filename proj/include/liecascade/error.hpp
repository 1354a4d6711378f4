#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>
#include <cstdint>

namespace liecascade {

enum class ErrorCode {
  InvalidType,
  ShapeError,
  InternalInvariantViolation,
  DegenerateString,
  DegeneratePair,
  NotARoot,
  NotWeyl,
  PreconditionViolated,
  NotAFolding,
  NoOuter,
  InvalidCount,
  InvalidIndex,
  NotStronglyOrthogonal,
  CounterexampleFound,
  NotCommuting,
  NotInvolution,
  UnsupportedType,
  IncompleteCoefficients,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::DegenerateString: return "DegenerateString";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotWeyl: return "NotWeyl";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotAFolding: return "NotAFolding";
    case ErrorCode::NoOuter: return "NoOuter";
    case ErrorCode::InvalidCount: return "InvalidCount";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::NotStronglyOrthogonal: return "NotStronglyOrthogonal";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::IncompleteCoefficients: return "IncompleteCoefficients";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a computed witness contradicts an expected classification.
/// `offending` holds the root coordinates of the set that failed.
class CounterexampleFound : public Error {
 public:
  CounterexampleFound(const std::string& what, std::vector<std::vector<std::int64_t>> offending)
      : Error(ErrorCode::CounterexampleFound, what), offending_(std::move(offending)) {}

  const std::vector<std::vector<std::int64_t>>& offending() const noexcept { return offending_; }

 private:
  std::vector<std::vector<std::int64_t>> offending_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace liecascade
