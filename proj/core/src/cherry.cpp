#include "tcnet/cherry.hpp"

#include <functional>
#include <unordered_set>

#include "tcnet/edit.hpp"
#include "tcnet/error.hpp"
#include "tcnet/phyloio.hpp"

namespace tcnet {

namespace {

struct PairShape {
  PairKind kind = PairKind::None;
  VertexId vx, vy;
  std::optional<Edge> central;
};

PairShape shape_of(const UndirectedNet& net, const std::string& x, const std::string& y) {
  PairShape s;
  if (x == y) return s;
  auto vx = net.find_leaf(x), vy = net.find_leaf(y);
  if (!vx || !vy) return s;
  s.vx = *vx;
  s.vy = *vy;
  if (net.degree(*vx) != 1 || net.degree(*vy) != 1) {
    if (net.leaf_count() == 2) s.kind = PairKind::Cherry;
    return s;
  }
  VertexId u = net.neighbors(*vx)[0], v = net.neighbors(*vy)[0];
  if (u == v || u == *vy) {
    s.kind = PairKind::Cherry;
    return s;
  }
  if (!net.is_leaf(u) && !net.is_leaf(v) && net.has_edge(u, v) && !is_cut_edge(net, Edge(u, v))) {
    s.kind = PairKind::ReticulatedCherry;
    s.central = Edge(u, v);
    return s;
  }
  if (net.leaf_count() == 2) s.kind = PairKind::Cherry;
  return s;
}

}  // namespace

PairKind classify_pair(const UndirectedNet& net, const std::string& x, const std::string& y) {
  return shape_of(net, x, y).kind;
}

UndirectedNet reduce_pair(const UndirectedNet& net, const std::string& x, const std::string& y) {
  PairShape s = shape_of(net, x, y);
  UndirectedNet out = net;
  switch (s.kind) {
    case PairKind::None:
      throw NotReducible("{" + x + "," + y + "} is neither a cherry nor a reticulated cherry");
    case PairKind::Cherry: {
      bool suppress_parent = net.leaf_count() >= 3;
      VertexId p = net.neighbors(s.vx).empty() ? s.vx : net.neighbors(s.vx)[0];
      out.remove_vertex(s.vx);
      if (suppress_parent && out.has_vertex(p) && out.degree(p) == 2) inplace::suppress(out, p);
      return out;
    }
    case PairKind::ReticulatedCherry:
      inplace::eliminate_edge(out, *s.central);
      return out;
  }
  return out;
}

UndirectedNet replay(const UndirectedNet& net, const CherryPickingSequence& seq) {
  UndirectedNet cur = net;
  for (const auto& [x, y] : seq.pairs) cur = reduce_pair(cur, x, y);
  return cur;
}

std::optional<CherryPickingSequence> cherry_picking_sequence(const UndirectedNet& net, std::size_t max_states) {
  std::unordered_set<std::string> dead;
  std::size_t states = 0;
  CherryPickingSequence seq;
  std::function<bool(const UndirectedNet&)> search = [&](const UndirectedNet& cur) -> bool {
    if (cur.vertex_count() == 1) return true;
    if (cur.leaf_count() < 2) return false;
    std::string key = serialize_upn(cur);
    if (dead.contains(key)) return false;
    if (++states > max_states)
      throw BudgetExceeded("cherry-picking search visited more than " + std::to_string(max_states) + " networks");
    auto labels = cur.leaf_labels();
    for (const auto& x : labels)
      for (const auto& y : labels) {
        if (classify_pair(cur, x, y) == PairKind::None) continue;
        UndirectedNet next;
        try {
          next = reduce_pair(cur, x, y);
        } catch (const WouldCreateParallelEdge&) {
          continue;
        }
        seq.pairs.emplace_back(x, y);
        if (search(next)) return true;
        seq.pairs.pop_back();
      }
    dead.insert(std::move(key));
    return false;
  };
  if (search(net)) return seq;
  return std::nullopt;
}

}  // namespace tcnet
