#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>

#include "tcnet/ids.hpp"
#include "tcnet/rooted_net.hpp"
#include "tcnet/undirected_net.hpp"

namespace tcnet {

/// Which edge receives the root and which way every other edge points.
/// The root vertex gets id net.next_id(); the two halves of the root edge
/// always point away from it and may be listed or omitted.
struct OrientationSpec {
  Edge root_edge;
  std::map<Edge, Arc> direction;
};

/// Builds the rooted network described by `spec`. Degrees are checked first,
/// in ascending vertex order (DegreeViolation), then acyclicity
/// (CyclicOrientation). Malformed specs throw InvalidOrientationSpec.
RootedNet apply_orientation(const UndirectedNet& net, const OrientationSpec& spec);

/// Reads the spec back out of a rooted network whose root subdivides an
/// edge of `net` (ids shared).
OrientationSpec spec_of(const RootedNet& rooted);

/// Every non-leaf vertex has a child that is a tree vertex or a leaf.
/// Also evaluates the stack / sibling-reticulation characterization and
/// throws std::logic_error if the two disagree.
bool is_tree_child(const RootedNet& net);

/// Forgets directions and suppresses the root. Vertex ids are kept.
UndirectedNet underlying_unrooted(const RootedNet& net);

/// Non-cut edges whose endpoints both touch a cut-edge, i.e. the edges of
/// maximal chains of length at least 2.
std::set<Edge> chain_edge_set(const UndirectedNet& net);

/// Subset of `s` whose deletion leaves a spanning tree. The tree is grown
/// from the lowest-id leaf, always preferring edges outside `s`. Throws
/// NotTwoCuttable if the edges outside `s` contain a cycle.
std::set<Edge> choose_s_prime(const UndirectedNet& net, const std::set<Edge>& s);

/// Tree-child orientation of a 2-cuttable network. The root subdivides the
/// lowest cut-edge. Throws NotTwoCuttable.
RootedNet tree_child_orient_2cuttable(const UndirectedNet& net);

/// Exhaustive search over root edges and edge directions, in canonical
/// order. Returns the first tree-child orientation found. Throws TooLarge
/// once `max_steps` search nodes have been expanded.
std::optional<RootedNet> brute_force_tree_child_orientation(const UndirectedNet& net,
                                                            std::size_t max_steps = 20'000'000);

}  // namespace tcnet
