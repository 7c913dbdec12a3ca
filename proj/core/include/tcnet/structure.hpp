#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcnet/ids.hpp"
#include "tcnet/rooted_net.hpp"
#include "tcnet/undirected_net.hpp"

namespace tcnet {

struct Blob {
  std::vector<VertexId> vertices;  // ascending
  std::vector<Edge> edges;         // canonical order

  int cycle_rank() const {
    return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
  }
};

/// Path of same-blob vertices that are each incident to a cut-edge.
struct Chain {
  std::vector<VertexId> path_vertices;
  std::vector<Edge> incident_cut_edges;  // one per path vertex
  bool closed = false;                   // the whole chain is a cycle of its blob

  std::size_t length() const { return path_vertices.size(); }
  /// Edges between consecutive path vertices.
  std::vector<Edge> edges() const;
};

/// Bipartition of the leaf labels. side_a holds the smallest label.
struct Split {
  std::vector<std::string> side_a;
  std::vector<std::string> side_b;

  static Split make(std::vector<std::string> a, std::vector<std::string> b);
  bool trivial() const { return side_a.size() == 1 || side_b.size() == 1; }
  bool compatible(const Split& other) const;
  std::string to_string() const;

  auto operator<=>(const Split&) const = default;
};

/// Cut-edges and blobs computed together.
struct Decomposition {
  std::set<Edge> cut;
  std::vector<Blob> blobs;                       // sorted by first vertex
  std::unordered_map<VertexId, int> blob_of;     // vertex -> blob index, absent if none
  std::set<VertexId> cut_incident;               // vertices touching a cut-edge

  int blob_index(VertexId v) const {
    auto it = blob_of.find(v);
    return it == blob_of.end() ? -1 : it->second;
  }
};

Decomposition decompose(const UndirectedNet& net);

/// Bridges in canonical order.
std::vector<Edge> cut_edges(const UndirectedNet& net);
std::vector<Blob> blobs(const UndirectedNet& net);
/// Every maximal chain once, sorted by first vertex. A chain that closes into
/// a cycle is reported starting at its lowest vertex and heading toward the
/// lower-id of its two neighbors.
std::vector<Chain> maximal_chains(const UndirectedNet& net);

/// Leaf split on the two sides of a cut-edge; nullopt if a side has no leaf.
std::optional<Split> split_of_cut_edge(const UndirectedNet& net, const Edge& e);

int reticulation_number(const UndirectedNet& net);
int reticulation_number(const RootedNet& net);
/// Largest blob cycle rank; 0 for trees.
int level(const UndirectedNet& net);

/// Connected components of the graph restricted to the given vertices.
std::vector<std::vector<VertexId>> components(const UndirectedNet& net);

}  // namespace tcnet
