#include "genrig/error.hpp"

namespace genrig {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::UnplacedVertex: return "UnplacedVertex";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::ExpressionBlowup: return "ExpressionBlowup";
    case ErrorKind::NotMultiHomogeneous: return "NotMultiHomogeneous";
    case ErrorKind::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::InvalidOrientation: return "InvalidOrientation";
    case ErrorKind::TooManySinks: return "TooManySinks";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::InconsistentSource: return "InconsistentSource";
    case ErrorKind::CannotReduce: return "CannotReduce";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace genrig
