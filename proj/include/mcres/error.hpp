#pragma once

#include <stdexcept>
#include <string>

namespace mcres {

enum class ErrorKind {
  NotArithmetic,
  GcdNotOne,
  NotMinimal,
  Overflow,
  ParseError,
  ShapeMismatch,
  NotElementary,
  HomogeneityBroken,
  PreconditionViolated,
  NotMinimalResolution,
  TranscriptIncomplete,
  DegreeImbalance,
  TemplateMismatch,
  CaseUnmatched,
  DataError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotArithmetic: return "NotArithmetic";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotElementary: return "NotElementary";
    case ErrorKind::HomogeneityBroken: return "HomogeneityBroken";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotMinimalResolution: return "NotMinimal";
    case ErrorKind::TranscriptIncomplete: return "TranscriptIncomplete";
    case ErrorKind::DegreeImbalance: return "DegreeImbalance";
    case ErrorKind::TemplateMismatch: return "TemplateMismatch";
    case ErrorKind::CaseUnmatched: return "CaseUnmatched";
    case ErrorKind::DataError: return "DataError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace mcres
