#pragma once

#include <stdexcept>
#include <string>

namespace tvg {

enum class Err {
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  ZeroData,
  NotNilpotent,
  NonSingularVector,
  NotSingular,
  ClosureLeavesGroup,
  QNotSquare,
  NotTwoWayCycle,
  NotTwoWayEdge,
  TooManyVertices,
  TooLarge,
  HypothesisUnmet,
  WrongFamily,
  ExceptionalField,
  BudgetExceeded,
  CapExceeded,
  CaseAnalysisExhausted,
  NoTransvectionInX,
  NotInGroup,
  NotInvertible,
  UnreachableTrace,
  UnsupportedQ,
  ParseError,
  InvalidArgument,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

  /// Process exit code used by the CLI (0 ok, 2 hypothesis unmet,
  /// 3 budget/cap, 4 parse, 5 unsupported q, 1 anything else).
  int exit_code() const;

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace tvg
