#pragma once

#include <stdexcept>
#include <string>

namespace bethe {

enum class ErrorKind {
  DegreeBoundExceeded,
  InvalidRank,
  MismatchedN,
  NotInvariant,
  PoleAtEvaluationPoint,
  PoleAtSample,
  CoincidentRoots,
  NotOffDiagonal,
  ZeroBetheVector,
  DegenerateAt,
  DegenerateTwist,
  NoConvergence,
  SchemaError,
  NoHighestWeightVector,
  NonUnique,
  CoincidentEvaluationPoints,
  Singular,
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::MismatchedN: return "MismatchedN";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorKind::PoleAtSample: return "PoleAtSample";
    case ErrorKind::CoincidentRoots: return "CoincidentRoots";
    case ErrorKind::NotOffDiagonal: return "NotOffDiagonal";
    case ErrorKind::ZeroBetheVector: return "ZeroBetheVector";
    case ErrorKind::DegenerateAt: return "DegenerateAt";
    case ErrorKind::DegenerateTwist: return "DegenerateTwist";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::NoHighestWeightVector: return "NoHighestWeightVector";
    case ErrorKind::NonUnique: return "NonUnique";
    case ErrorKind::CoincidentEvaluationPoints: return "CoincidentEvaluationPoints";
    case ErrorKind::Singular: return "Singular";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace bethe
