#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genrig {

enum class ErrorKind {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  UnplacedVertex,
  DimensionMismatch,
  IndexOutOfRange,
  ShapeMismatch,
  WidthMismatch,
  ExpressionBlowup,
  NotMultiHomogeneous,
  EdgeNotInGraph,
  PreconditionViolated,
  SearchBudgetExceeded,
  InvalidOrientation,
  TooManySinks,
  SingularDenominator,
  InconsistentSource,
  CannotReduce,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace genrig
