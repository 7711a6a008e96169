#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torelli {

enum class ErrorKind {
  BadPrime,
  BadDegree,
  NotSquarefree,
  ZeroPolynomial,
  NotOnCurve,
  NonSplitSupport,
  ZeroFunction,
  CurveMismatch,
  NotEffective,
  NotReduced,
  InternalBoundError,
  Inconclusive,
  SizeCapExceeded,
  NotBasePointFree,
  NotMinimal,
  DegenerateDisc,
  InconsistentInvariants,
  OracleMismatch,
  NoTwistFound,
  RetryExhausted,
  BadCubic,
  NotTorsion,
  TrivialClass,
  NotSection,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::NonSplitSupport: return "NonSplitSupport";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::CurveMismatch: return "CurveMismatch";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::InternalBoundError: return "InternalBoundError";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::NotBasePointFree: return "NotBasePointFree";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::DegenerateDisc: return "DegenerateDisc";
    case ErrorKind::InconsistentInvariants: return "InconsistentInvariants";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::NoTwistFound: return "NoTwistFound";
    case ErrorKind::RetryExhausted: return "RetryExhausted";
    case ErrorKind::BadCubic: return "BadCubic";
    case ErrorKind::NotTorsion: return "NotTorsion";
    case ErrorKind::TrivialClass: return "TrivialClass";
    case ErrorKind::NotSection: return "NotSection";
  }
  return "Unknown";
}

/// Domain error raised by every module. `kind()` is the stable identifier
/// reported by the command-line front end.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace torelli
