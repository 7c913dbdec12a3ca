#include "tcnet/undirected_net.hpp"

#include <algorithm>

#include "tcnet/error.hpp"

namespace tcnet {

UndirectedNet::Node& UndirectedNet::node(VertexId v) {
  auto it = nodes_.find(v);
  if (it == nodes_.end()) throw UnknownVertex("unknown vertex " + to_string(v));
  return it->second;
}

const UndirectedNet::Node& UndirectedNet::node(VertexId v) const {
  auto it = nodes_.find(v);
  if (it == nodes_.end()) throw UnknownVertex("unknown vertex " + to_string(v));
  return it->second;
}

VertexId UndirectedNet::add_vertex() {
  VertexId id(next_id_++);
  nodes_.emplace(id, Node{});
  return id;
}

void UndirectedNet::add_vertex(VertexId id) {
  if (id.value == 0) throw DuplicateVertex("vertex id 0 is reserved");
  if (!nodes_.emplace(id, Node{}).second)
    throw DuplicateVertex("vertex " + to_string(id) + " already exists");
  next_id_ = std::max(next_id_, id.value + 1);
}

VertexId UndirectedNet::add_leaf(std::string label) {
  VertexId v = add_vertex();
  set_label(v, std::move(label));
  return v;
}

void UndirectedNet::remove_vertex(VertexId v) {
  Node& n = node(v);
  std::vector<VertexId> nbrs = n.nbrs;
  std::size_t loops = 0;
  for (VertexId w : nbrs) {
    if (w == v) {
      ++loops;
      continue;
    }
    auto& wn = nodes_.at(w).nbrs;
    wn.erase(std::find(wn.begin(), wn.end(), v));
    --edge_count_;
  }
  edge_count_ -= loops / 2;
  clear_label(v);
  nodes_.erase(v);
}

void UndirectedNet::add_edge(VertexId a, VertexId b) {
  Node& na = node(a);
  Node& nb = node(b);
  na.nbrs.push_back(b);
  nb.nbrs.push_back(a);
  ++edge_count_;
}

void UndirectedNet::remove_edge(VertexId a, VertexId b) {
  if (!has_edge(a, b))
    throw UnknownEdge("no edge " + to_string(a) + "-" + to_string(b));
  auto& na = node(a).nbrs;
  na.erase(std::find(na.begin(), na.end(), b));
  auto& nb = node(b).nbrs;
  nb.erase(std::find(nb.begin(), nb.end(), a));
  --edge_count_;
}

void UndirectedNet::set_label(VertexId v, std::string label) {
  Node& n = node(v);
  clear_label(v);
  by_label_.emplace(label, v);
  n.label = std::move(label);
}

void UndirectedNet::clear_label(VertexId v) {
  Node& n = node(v);
  if (!n.label) return;
  auto [lo, hi] = by_label_.equal_range(*n.label);
  for (auto it = lo; it != hi; ++it) {
    if (it->second == v) {
      by_label_.erase(it);
      break;
    }
  }
  n.label.reset();
}

bool UndirectedNet::has_edge(VertexId a, VertexId b) const {
  auto it = nodes_.find(a);
  if (it == nodes_.end() || !nodes_.contains(b)) return false;
  const auto& nb = it->second.nbrs;
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

std::size_t UndirectedNet::edge_multiplicity(VertexId a, VertexId b) const {
  auto it = nodes_.find(a);
  if (it == nodes_.end()) return 0;
  auto c = static_cast<std::size_t>(std::count(it->second.nbrs.begin(), it->second.nbrs.end(), b));
  return a == b ? c / 2 : c;
}

std::span<const VertexId> UndirectedNet::neighbors(VertexId v) const {
  return node(v).nbrs;
}

std::optional<std::string_view> UndirectedNet::label(VertexId v) const {
  const Node& n = node(v);
  if (!n.label) return std::nullopt;
  return std::string_view(*n.label);
}

std::optional<VertexId> UndirectedNet::find_leaf(std::string_view label) const {
  auto [lo, hi] = by_label_.equal_range(label);
  if (lo == hi) return std::nullopt;
  VertexId best = lo->second;
  for (auto it = lo; it != hi; ++it) best = std::min(best, it->second);
  return best;
}

std::vector<VertexId> UndirectedNet::vertices() const {
  std::vector<VertexId> out;
  out.reserve(nodes_.size());
  for (const auto& [v, _] : nodes_) out.push_back(v);
  return out;
}

std::vector<Edge> UndirectedNet::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, n] : nodes_) {
    bool skip_loop = false;
    for (VertexId w : n.nbrs) {
      if (v < w) {
        out.emplace_back(v, w);
      } else if (v == w) {
        if (!skip_loop) out.emplace_back(v, w);
        skip_loop = !skip_loop;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> UndirectedNet::leaves() const {
  std::vector<VertexId> out;
  for (const auto& [v, n] : nodes_)
    if (n.label) out.push_back(v);
  return out;
}

std::vector<std::string> UndirectedNet::leaf_labels() const {
  std::vector<std::string> out;
  out.reserve(by_label_.size());
  for (const auto& [l, _] : by_label_) out.push_back(l);
  return out;
}

std::vector<std::pair<VertexId, std::string>> UndirectedNet::labeled_vertices() const {
  std::vector<std::pair<VertexId, std::string>> out;
  for (const auto& [v, n] : nodes_)
    if (n.label) out.emplace_back(v, *n.label);
  return out;
}

void UndirectedNet::reserve_ids_from(VertexId floor) {
  next_id_ = std::max(next_id_, floor.value);
}

}  // namespace tcnet
