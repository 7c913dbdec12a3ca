#include "tcnet/rooted_net.hpp"

#include <algorithm>

#include "tcnet/error.hpp"

namespace tcnet {

RootedNet::Node& RootedNet::node(VertexId v) {
  auto it = nodes_.find(v);
  if (it == nodes_.end()) throw UnknownVertex("unknown vertex " + to_string(v));
  return it->second;
}

const RootedNet::Node& RootedNet::node(VertexId v) const {
  auto it = nodes_.find(v);
  if (it == nodes_.end()) throw UnknownVertex("unknown vertex " + to_string(v));
  return it->second;
}

VertexId RootedNet::add_vertex() {
  VertexId id(next_id_++);
  nodes_.emplace(id, Node{});
  return id;
}

void RootedNet::add_vertex(VertexId id) {
  if (id.value == 0) throw DuplicateVertex("vertex id 0 is reserved");
  if (!nodes_.emplace(id, Node{}).second)
    throw DuplicateVertex("vertex " + to_string(id) + " already exists");
  next_id_ = std::max(next_id_, id.value + 1);
}

void RootedNet::remove_vertex(VertexId v) {
  Node n = node(v);
  for (VertexId c : n.children) remove_arc(v, c);
  for (VertexId p : n.parents) remove_arc(p, v);
  if (n.label) {
    auto [lo, hi] = by_label_.equal_range(*n.label);
    for (auto it = lo; it != hi; ++it)
      if (it->second == v) {
        by_label_.erase(it);
        break;
      }
  }
  if (root_ == v) root_.reset();
  nodes_.erase(v);
}

void RootedNet::add_arc(VertexId tail, VertexId head) {
  Node& t = node(tail);
  Node& h = node(head);
  t.children.push_back(head);
  h.parents.push_back(tail);
  ++arc_count_;
}

void RootedNet::remove_arc(VertexId tail, VertexId head) {
  if (!has_arc(tail, head))
    throw UnknownEdge("no arc (" + to_string(tail) + "," + to_string(head) + ")");
  auto& c = node(tail).children;
  c.erase(std::find(c.begin(), c.end(), head));
  auto& p = node(head).parents;
  p.erase(std::find(p.begin(), p.end(), tail));
  --arc_count_;
}

void RootedNet::set_label(VertexId v, std::string label) {
  Node& n = node(v);
  if (n.label) {
    auto [lo, hi] = by_label_.equal_range(*n.label);
    for (auto it = lo; it != hi; ++it)
      if (it->second == v) {
        by_label_.erase(it);
        break;
      }
  }
  by_label_.emplace(label, v);
  n.label = std::move(label);
}

void RootedNet::set_root(VertexId v) {
  node(v);
  root_ = v;
}

bool RootedNet::has_arc(VertexId tail, VertexId head) const {
  auto it = nodes_.find(tail);
  if (it == nodes_.end()) return false;
  const auto& c = it->second.children;
  return std::find(c.begin(), c.end(), head) != c.end();
}

std::span<const VertexId> RootedNet::children(VertexId v) const { return node(v).children; }
std::span<const VertexId> RootedNet::parents(VertexId v) const { return node(v).parents; }

std::optional<std::string_view> RootedNet::label(VertexId v) const {
  const Node& n = node(v);
  if (!n.label) return std::nullopt;
  return std::string_view(*n.label);
}

std::optional<VertexId> RootedNet::find_leaf(std::string_view label) const {
  auto [lo, hi] = by_label_.equal_range(label);
  if (lo == hi) return std::nullopt;
  VertexId best = lo->second;
  for (auto it = lo; it != hi; ++it) best = std::min(best, it->second);
  return best;
}

std::vector<VertexId> RootedNet::vertices() const {
  std::vector<VertexId> out;
  out.reserve(nodes_.size());
  for (const auto& [v, _] : nodes_) out.push_back(v);
  return out;
}

std::vector<Arc> RootedNet::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (const auto& [v, n] : nodes_)
    for (VertexId c : n.children) out.push_back(Arc{v, c});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> RootedNet::leaves() const {
  std::vector<VertexId> out;
  for (const auto& [v, n] : nodes_)
    if (n.children.empty() && v != root_) out.push_back(v);
  return out;
}

std::vector<std::string> RootedNet::leaf_labels() const {
  std::vector<std::string> out;
  for (const auto& [l, _] : by_label_) out.push_back(l);
  return out;
}

std::size_t RootedNet::reticulation_count() const {
  std::size_t r = 0;
  for (const auto& [v, n] : nodes_)
    if (n.parents.size() >= 2) r += n.parents.size() - 1;
  return r;
}

void RootedNet::reserve_ids_from(VertexId floor) {
  next_id_ = std::max(next_id_, floor.value);
}

void MixedGraph::direct(const Arc& a) {
  Edge e = a.edge();
  if (edges.erase(e) == 0 && !arcs.contains(a))
    throw UnknownEdge("no edge " + to_string(a.tail) + "-" + to_string(a.head));
  arcs.insert(a);
}

bool MixedGraph::is_directed(const Edge& e) const { return arc_of(e).has_value(); }

std::optional<Arc> MixedGraph::arc_of(const Edge& e) const {
  if (arcs.contains(Arc{e.a, e.b})) return Arc{e.a, e.b};
  if (arcs.contains(Arc{e.b, e.a})) return Arc{e.b, e.a};
  return std::nullopt;
}

bool MixedGraph::consistent() const {
  for (const Arc& a : arcs)
    if (edges.contains(a.edge())) return false;
  return true;
}

}  // namespace tcnet
