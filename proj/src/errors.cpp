#include "tvg/errors.hpp"

namespace tvg {

const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::ZeroData: return "ZeroData";
    case Err::NotNilpotent: return "NotNilpotent";
    case Err::NonSingularVector: return "NonSingularVector";
    case Err::NotSingular: return "NotSingular";
    case Err::ClosureLeavesGroup: return "ClosureLeavesGroup";
    case Err::QNotSquare: return "QNotSquare";
    case Err::NotTwoWayCycle: return "NotTwoWayCycle";
    case Err::NotTwoWayEdge: return "NotTwoWayEdge";
    case Err::TooManyVertices: return "TooManyVertices";
    case Err::TooLarge: return "TooLarge";
    case Err::HypothesisUnmet: return "HypothesisUnmet";
    case Err::WrongFamily: return "WrongFamily";
    case Err::ExceptionalField: return "ExceptionalField";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::CapExceeded: return "CapExceeded";
    case Err::CaseAnalysisExhausted: return "CaseAnalysisExhausted";
    case Err::NoTransvectionInX: return "NoTransvectionInX";
    case Err::NotInGroup: return "NotInGroup";
    case Err::NotInvertible: return "NotInvertible";
    case Err::UnreachableTrace: return "UnreachableTrace";
    case Err::UnsupportedQ: return "UnsupportedQ";
    case Err::ParseError: return "ParseError";
    case Err::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

int Error::exit_code() const {
  switch (code_) {
    case Err::HypothesisUnmet: return 2;
    case Err::BudgetExceeded:
    case Err::CapExceeded:
    case Err::TooManyVertices:
    case Err::TooLarge: return 3;
    case Err::ParseError: return 4;
    case Err::UnsupportedQ: return 5;
    default: return 1;
  }
}

}  // namespace tvg
