#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tcnet/ids.hpp"

namespace tcnet {

/// Base class of every recoverable error raised by the library. Broken
/// internal invariants are reported as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TCNET_DECLARE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// graph editing
TCNET_DECLARE_ERROR(UnknownVertex);
TCNET_DECLARE_ERROR(UnknownEdge);
TCNET_DECLARE_ERROR(DuplicateVertex);
TCNET_DECLARE_ERROR(NotDegreeTwo);
TCNET_DECLARE_ERROR(WouldCreateParallelEdge);
TCNET_DECLARE_ERROR(IsCutEdge);
TCNET_DECLARE_ERROR(EndpointIsLeaf);
TCNET_DECLARE_ERROR(NotCutEdge);
TCNET_DECLARE_ERROR(LabelSetMismatch);

// parsing
TCNET_DECLARE_ERROR(DegreeError);
TCNET_DECLARE_ERROR(CycleError);
TCNET_DECLARE_ERROR(NotBinary);
TCNET_DECLARE_ERROR(ClauseArityError);

// recognition / search
TCNET_DECLARE_ERROR(InvalidQ);
TCNET_DECLARE_ERROR(TooLarge);
TCNET_DECLARE_ERROR(BudgetExceeded);

// orientation
TCNET_DECLARE_ERROR(InvalidOrientationSpec);
TCNET_DECLARE_ERROR(NotTwoCuttable);
TCNET_DECLARE_ERROR(NotReducible);

// sat gadgets
TCNET_DECLARE_ERROR(NotTwoBalanced);
TCNET_DECLARE_ERROR(UnsatisfiedAssignment);
TCNET_DECLARE_ERROR(InconsistentGadgetState);
TCNET_DECLARE_ERROR(NotTreeChild);

// containment
TCNET_DECLARE_ERROR(TrivialCutEdge);
TCNET_DECLARE_ERROR(NoMatchingTreeEdge);
TCNET_DECLARE_ERROR(TooFewLeaves);
TCNET_DECLARE_ERROR(NotSimple);
TCNET_DECLARE_ERROR(NotThreeCuttable);
TCNET_DECLARE_ERROR(NotATree);

// generators
TCNET_DECLARE_ERROR(InvalidN);
TCNET_DECLARE_ERROR(InvalidConfig);

#undef TCNET_DECLARE_ERROR

/// Malformed input text. Carries a 1-based line and column.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class DegreeViolation : public Error {
 public:
  DegreeViolation(VertexId v, const std::string& what) : Error(what), vertex_(v) {}
  VertexId vertex() const noexcept { return vertex_; }

 private:
  VertexId vertex_;
};

class CyclicOrientation : public Error {
 public:
  CyclicOrientation(std::vector<VertexId> cycle, const std::string& what)
      : Error(what), cycle_(std::move(cycle)) {}
  const std::vector<VertexId>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<VertexId> cycle_;
};

}  // namespace tcnet
