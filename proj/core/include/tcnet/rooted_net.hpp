#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcnet/ids.hpp"

namespace tcnet {

/// Directed leaf-labeled graph used for rooted binary phylogenetic networks.
/// Like UndirectedNet it only stores structure; validate_rooted checks the
/// degree rules and acyclicity.
class RootedNet {
 public:
  RootedNet() = default;

  VertexId add_vertex();
  void add_vertex(VertexId id);
  void remove_vertex(VertexId v);

  void add_arc(VertexId tail, VertexId head);
  void add_arc(const Arc& a) { add_arc(a.tail, a.head); }
  void remove_arc(VertexId tail, VertexId head);
  void remove_arc(const Arc& a) { remove_arc(a.tail, a.head); }

  void set_label(VertexId v, std::string label);
  void set_root(VertexId v);
  std::optional<VertexId> root() const { return root_; }

  bool has_vertex(VertexId v) const { return nodes_.contains(v); }
  bool has_arc(VertexId tail, VertexId head) const;

  std::span<const VertexId> children(VertexId v) const;
  std::span<const VertexId> parents(VertexId v) const;
  std::size_t in_degree(VertexId v) const { return parents(v).size(); }
  std::size_t out_degree(VertexId v) const { return children(v).size(); }

  bool is_reticulation(VertexId v) const { return in_degree(v) == 2 && out_degree(v) == 1; }
  bool is_tree_vertex(VertexId v) const { return in_degree(v) == 1 && out_degree(v) == 2; }
  bool is_leaf(VertexId v) const { return out_degree(v) == 0 && in_degree(v) == 1; }

  std::optional<std::string_view> label(VertexId v) const;
  std::optional<VertexId> find_leaf(std::string_view label) const;

  std::vector<VertexId> vertices() const;
  /// Arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;
  std::vector<VertexId> leaves() const;
  std::vector<std::string> leaf_labels() const;

  std::size_t vertex_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arc_count_; }
  std::size_t reticulation_count() const;

  VertexId next_id() const { return VertexId(next_id_); }
  void reserve_ids_from(VertexId floor);

  friend bool operator==(const RootedNet&, const RootedNet&) = default;

 private:
  struct Node {
    std::vector<VertexId> children;
    std::vector<VertexId> parents;
    std::optional<std::string> label;
    friend bool operator==(const Node&, const Node&) = default;
  };

  Node& node(VertexId v);
  const Node& node(VertexId v) const;

  std::map<VertexId, Node> nodes_;
  std::multimap<std::string, VertexId, std::less<>> by_label_;
  std::optional<VertexId> root_;
  std::uint32_t next_id_ = 1;
  std::size_t arc_count_ = 0;
};

/// Partially oriented graph: some edges already carry a direction.
struct MixedGraph {
  std::set<VertexId> vertices;
  std::set<Edge> edges;
  std::set<Arc> arcs;
  std::optional<VertexId> root;

  /// Replaces the undirected edge under `a` by the arc `a`.
  void direct(const Arc& a);
  bool is_directed(const Edge& e) const;
  std::optional<Arc> arc_of(const Edge& e) const;
  /// Edge set and arc set are disjoint as vertex pairs.
  bool consistent() const;
};

}  // namespace tcnet
