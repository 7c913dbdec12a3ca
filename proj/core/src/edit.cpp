#include "tcnet/edit.hpp"

#include <set>
#include <vector>

#include "tcnet/error.hpp"

namespace tcnet {

namespace inplace {

VertexId subdivide(UndirectedNet& net, const Edge& e) {
  if (!net.has_edge(e))
    throw UnknownEdge("no edge " + to_string(e.a) + "-" + to_string(e.b));
  net.remove_edge(e);
  VertexId v = net.add_vertex();
  net.add_edge(e.a, v);
  net.add_edge(v, e.b);
  return v;
}

VertexId subdivide(RootedNet& net, const Arc& a) {
  if (!net.has_arc(a.tail, a.head))
    throw UnknownEdge("no arc (" + to_string(a.tail) + "," + to_string(a.head) + ")");
  net.remove_arc(a);
  VertexId v = net.add_vertex();
  net.add_arc(a.tail, v);
  net.add_arc(v, a.head);
  return v;
}

void suppress(UndirectedNet& net, VertexId v) {
  auto nb = net.neighbors(v);
  if (nb.size() != 2)
    throw NotDegreeTwo("vertex " + to_string(v) + " has degree " + std::to_string(nb.size()));
  VertexId a = nb[0], b = nb[1];
  if (a == v || b == v || a == b || net.has_edge(a, b))
    throw WouldCreateParallelEdge("suppressing " + to_string(v) + " would join " + to_string(a) +
                                  " and " + to_string(b) + " twice");
  net.remove_vertex(v);
  net.add_edge(a, b);
}

void suppress(RootedNet& net, VertexId v) {
  if (net.in_degree(v) != 1 || net.out_degree(v) != 1)
    throw NotDegreeTwo("vertex " + to_string(v) + " is not in-degree 1 and out-degree 1");
  VertexId p = net.parents(v)[0], c = net.children(v)[0];
  if (p == c || net.has_arc(p, c))
    throw WouldCreateParallelEdge("suppressing " + to_string(v) + " would duplicate arc (" +
                                  to_string(p) + "," + to_string(c) + ")");
  bool was_root = net.root() == v;
  net.remove_vertex(v);
  net.add_arc(p, c);
  if (was_root) net.set_root(p);
}

void eliminate_edge(UndirectedNet& net, const Edge& e) {
  if (!net.has_edge(e))
    throw UnknownEdge("no edge " + to_string(e.a) + "-" + to_string(e.b));
  if (net.is_leaf(e.a) || net.is_leaf(e.b))
    throw EndpointIsLeaf("edge " + to_string(e.a) + "-" + to_string(e.b) + " ends at a leaf");
  if (is_cut_edge(net, e))
    throw IsCutEdge("edge " + to_string(e.a) + "-" + to_string(e.b) + " is a cut-edge");
  net.remove_edge(e);
  suppress(net, e.a);
  suppress(net, e.b);
}

}  // namespace inplace

std::pair<UndirectedNet, VertexId> subdivide(const UndirectedNet& net, const Edge& e) {
  UndirectedNet out = net;
  VertexId v = inplace::subdivide(out, e);
  return {std::move(out), v};
}

std::pair<RootedNet, VertexId> subdivide(const RootedNet& net, const Arc& a) {
  RootedNet out = net;
  VertexId v = inplace::subdivide(out, a);
  return {std::move(out), v};
}

UndirectedNet suppress(const UndirectedNet& net, VertexId v) {
  UndirectedNet out = net;
  inplace::suppress(out, v);
  return out;
}

RootedNet suppress(const RootedNet& net, VertexId v) {
  RootedNet out = net;
  inplace::suppress(out, v);
  return out;
}

UndirectedNet eliminate_edge(const UndirectedNet& net, const Edge& e) {
  UndirectedNet out = net;
  inplace::eliminate_edge(out, e);
  return out;
}

bool is_cut_edge(const UndirectedNet& net, const Edge& e) {
  if (!net.has_edge(e))
    throw UnknownEdge("no edge " + to_string(e.a) + "-" + to_string(e.b));
  if (net.edge_multiplicity(e.a, e.b) > 1) return false;
  std::set<VertexId> seen{e.a};
  std::vector<VertexId> stack{e.a};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : net.neighbors(v)) {
      if ((v == e.a && w == e.b) || (v == e.b && w == e.a)) continue;
      if (w == e.b) return false;
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return true;
}

}  // namespace tcnet
