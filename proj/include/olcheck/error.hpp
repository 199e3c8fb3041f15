#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace olcheck {

enum class ErrorKind {
  InvalidSpec,
  CycleInCovers,
  NoBottom,
  NoTop,
  NotALattice,
  OrthoNotInvolution,
  OrthoNotOrderReversing,
  NotOrthocomplement,
  NotComplementClosed,
  UnknownBuiltin,
  SyntaxError,
  AmbiguousChain,
  UnknownCondition,
  UnboundVariable,
  TooManyVariables,
  BudgetExceeded,
  InternalInconsistency,
  BadHypothesisIndex,
  NotAnAxiomInstance,
  BadMP,
  Io,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::CycleInCovers: return "CycleInCovers";
    case ErrorKind::NoBottom: return "NoBottom";
    case ErrorKind::NoTop: return "NoTop";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::OrthoNotInvolution: return "OrthoNotInvolution";
    case ErrorKind::OrthoNotOrderReversing: return "OrthoNotOrderReversing";
    case ErrorKind::NotOrthocomplement: return "NotOrthocomplement";
    case ErrorKind::NotComplementClosed: return "NotComplementClosed";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::AmbiguousChain: return "AmbiguousChain";
    case ErrorKind::UnknownCondition: return "UnknownCondition";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::TooManyVariables: return "TooManyVariables";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::BadHypothesisIndex: return "BadHypothesisIndex";
    case ErrorKind::NotAnAxiomInstance: return "NotAnAxiomInstance";
    case ErrorKind::BadMP: return "BadMP";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and machine-checkable;
/// the message carries the offending labels, positions or line numbers.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace olcheck
