#pragma once

#include <string>
#include <vector>

#include "tcnet/error.hpp"
#include "tcnet/ids.hpp"
#include "tcnet/rooted_net.hpp"
#include "tcnet/undirected_net.hpp"

namespace tcnet {

enum class ViolationKind {
  Empty,
  Disconnected,
  BadDegree,
  UnlabeledLeaf,
  LabeledInternal,
  DuplicateLabel,
  ParallelEdge,
  SelfLoop,
  Cycle,
  MissingRoot,
  Unreachable,
  ClauseCount,
  OccurrenceCount,
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::vector<VertexId> vertices;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind k) const;
  std::string summary() const;
};

/// A well-formed document that describes an invalid network.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("invalid network: " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Checks simplicity, connectivity, degrees 1/3, and that the degree-1
/// vertices are exactly the leaves with distinct labels. A single labeled
/// vertex is accepted as the network on one leaf.
ValidationReport validate_unrooted(const UndirectedNet& net);

/// Checks root (0,2), leaves (1,0), other vertices (1,2) or (2,1), no
/// parallel arcs, acyclicity, and reachability from the root.
ValidationReport validate_rooted(const RootedNet& net);

}  // namespace tcnet
