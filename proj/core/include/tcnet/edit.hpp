#pragma once

#include <utility>

#include "tcnet/ids.hpp"
#include "tcnet/rooted_net.hpp"
#include "tcnet/undirected_net.hpp"

namespace tcnet {

/// Replaces `e` by a path through a fresh vertex.
std::pair<UndirectedNet, VertexId> subdivide(const UndirectedNet& net, const Edge& e);
std::pair<RootedNet, VertexId> subdivide(const RootedNet& net, const Arc& a);

/// Deletes a degree-2 (resp. in 1/out 1) vertex and joins its neighbors.
UndirectedNet suppress(const UndirectedNet& net, VertexId v);
RootedNet suppress(const RootedNet& net, VertexId v);

/// Deletes the non-cut edge `e` and suppresses both endpoints.
UndirectedNet eliminate_edge(const UndirectedNet& net, const Edge& e);

/// In-place counterparts, for algorithms that edit a private working copy.
namespace inplace {
VertexId subdivide(UndirectedNet& net, const Edge& e);
VertexId subdivide(RootedNet& net, const Arc& a);
void suppress(UndirectedNet& net, VertexId v);
void suppress(RootedNet& net, VertexId v);
void eliminate_edge(UndirectedNet& net, const Edge& e);
}  // namespace inplace

/// True iff deleting `e` disconnects its endpoints.
bool is_cut_edge(const UndirectedNet& net, const Edge& e);

}  // namespace tcnet
