#pragma once

#include <map>
#include <optional>

#include "tcnet/ids.hpp"
#include "tcnet/rooted_net.hpp"
#include "tcnet/undirected_net.hpp"

namespace tcnet {

using VertexMap = std::map<VertexId, VertexId>;

/// Isomorphism a -> b that maps every leaf to the leaf with the same label.
/// Backtracking search seeded at the leaves; meant for desk-scale graphs.
std::optional<VertexMap> find_labeled_isomorphism(const UndirectedNet& a, const UndirectedNet& b);

/// Throws LabelSetMismatch if the label sets differ.
bool labeled_isomorphic(const UndirectedNet& a, const UndirectedNet& b);

/// Same for rooted networks; arcs must map to arcs and root to root.
std::optional<VertexMap> find_rooted_isomorphism(const RootedNet& a, const RootedNet& b);
bool rooted_isomorphic(const RootedNet& a, const RootedNet& b);

}  // namespace tcnet
