#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcnet/undirected_net.hpp"

namespace tcnet {

struct CherryPickingSequence {
  std::vector<std::pair<std::string, std::string>> pairs;
  friend bool operator==(const CherryPickingSequence&, const CherryPickingSequence&) = default;
};

enum class PairKind { None, Cherry, ReticulatedCherry };

/// How {x,y} can be reduced in `net`. Leaves with a common neighbor form a
/// cherry. Otherwise leaves whose neighbors are joined by a non-cut edge form
/// a reticulated cherry. Failing both, any pair of a two-leaf network is a
/// cherry.
PairKind classify_pair(const UndirectedNet& net, const std::string& x, const std::string& y);

/// Reduces the ordered pair (x,y): a cherry loses x (and the vertex it hung
/// from is suppressed when at least three leaves remain); a reticulated
/// cherry loses its central edge. Throws NotReducible, WouldCreateParallelEdge.
UndirectedNet reduce_pair(const UndirectedNet& net, const std::string& x, const std::string& y);

/// Applies the pairs in order and returns the final network.
UndirectedNet replay(const UndirectedNet& net, const CherryPickingSequence& seq);

/// Depth-first search over ordered pairs in lexicographic label order, with
/// dead ends memoized by their UPN text. Returns nullopt if no sequence
/// reaches a single vertex. Throws BudgetExceeded after `max_states`
/// distinct networks.
std::optional<CherryPickingSequence> cherry_picking_sequence(const UndirectedNet& net,
                                                             std::size_t max_states = 200'000);

}  // namespace tcnet
