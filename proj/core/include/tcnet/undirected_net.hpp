#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcnet/ids.hpp"

namespace tcnet {

/// Undirected leaf-labeled graph. This is the carrier for unrooted binary
/// phylogenetic networks; the class itself does not enforce the network
/// invariants (see validate_unrooted), so parsers and reductions can hold
/// intermediate states and report what is wrong with them.
///
/// Parallel edges and self-loops are representable only so that validation
/// can name them. A self-loop at v appears twice in v's neighbor list.
class UndirectedNet {
 public:
  UndirectedNet() = default;

  /// Adds a vertex with a fresh id.
  VertexId add_vertex();
  /// Adds a vertex with a caller-chosen id (used by parsers).
  void add_vertex(VertexId id);
  VertexId add_leaf(std::string label);
  void remove_vertex(VertexId v);

  void add_edge(VertexId a, VertexId b);
  /// Removes one copy of the edge {a,b}.
  void remove_edge(VertexId a, VertexId b);
  void remove_edge(const Edge& e) { remove_edge(e.a, e.b); }

  void set_label(VertexId v, std::string label);
  void clear_label(VertexId v);

  bool has_vertex(VertexId v) const { return nodes_.contains(v); }
  bool has_edge(VertexId a, VertexId b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.a, e.b); }
  std::size_t edge_multiplicity(VertexId a, VertexId b) const;

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// Label of v, or nullopt for unlabeled vertices.
  std::optional<std::string_view> label(VertexId v) const;
  bool is_leaf(VertexId v) const { return label(v).has_value(); }
  /// Vertex carrying `label` (the lowest id if the label is duplicated).
  std::optional<VertexId> find_leaf(std::string_view label) const;

  /// Vertex ids in ascending order.
  std::vector<VertexId> vertices() const;
  /// Edges in canonical ascending order, repeated by multiplicity.
  std::vector<Edge> edges() const;
  /// Labeled vertices in ascending id order.
  std::vector<VertexId> leaves() const;
  /// Sorted leaf labels (the set X).
  std::vector<std::string> leaf_labels() const;
  /// Labeled vertices as (vertex, label) in ascending id order.
  std::vector<std::pair<VertexId, std::string>> labeled_vertices() const;

  std::size_t vertex_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t leaf_count() const { return by_label_.size(); }
  bool empty() const { return nodes_.empty(); }

  /// The id the next add_vertex() will return.
  VertexId next_id() const { return VertexId(next_id_); }
  /// Ensures subsequently allocated ids are >= `floor`.
  void reserve_ids_from(VertexId floor);

  friend bool operator==(const UndirectedNet&, const UndirectedNet&) = default;

 private:
  struct Node {
    std::vector<VertexId> nbrs;
    std::optional<std::string> label;
    friend bool operator==(const Node&, const Node&) = default;
  };

  Node& node(VertexId v);
  const Node& node(VertexId v) const;

  std::map<VertexId, Node> nodes_;
  std::multimap<std::string, VertexId, std::less<>> by_label_;
  std::uint32_t next_id_ = 1;
  std::size_t edge_count_ = 0;
};

}  // namespace tcnet
