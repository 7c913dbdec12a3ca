#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tcnet/undirected_net.hpp"

namespace tcnet::detail {

/// Index-based snapshot of an UndirectedNet. Vertex i is ids[i] (ascending
/// id order); edge k is edges[k] (canonical order).
struct Dense {
  std::vector<VertexId> ids;
  std::unordered_map<VertexId, int> index;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge index)
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> leaf;

  explicit Dense(const UndirectedNet& net) {
    ids = net.vertices();
    index.reserve(ids.size());
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) index.emplace(ids[i], i);
    adj.resize(ids.size());
    leaf.resize(ids.size());
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) leaf[i] = net.is_leaf(ids[i]);
    for (const Edge& e : net.edges()) {
      int a = index.at(e.a), b = index.at(e.b);
      int k = static_cast<int>(edges.size());
      edges.emplace_back(a, b);
      adj[a].emplace_back(b, k);
      if (a != b) adj[b].emplace_back(a, k);
    }
  }

  int n() const { return static_cast<int>(ids.size()); }
  int m() const { return static_cast<int>(edges.size()); }
  Edge edge(int k) const { return Edge(ids[edges[k].first], ids[edges[k].second]); }
};

/// Bridges of the multigraph, by edge index.
std::vector<bool> bridge_mask(const Dense& g);

/// Unbiased integer in [0, n) from a 64-bit engine. Used instead of the
/// standard distributions so that generated instances are identical across
/// standard library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

}  // namespace tcnet::detail
