#include "tcnet/containment.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "tcnet/cuttable.hpp"
#include "tcnet/edit.hpp"
#include "tcnet/error.hpp"
#include "tcnet/validate.hpp"

namespace tcnet {

namespace {

std::string edge_str(const Edge& e) { return "{" + to_string(e.a) + "," + to_string(e.b) + "}"; }

std::string path_str(const Path& p) {
  std::string s;
  for (VertexId v : p) s += (s.empty() ? "" : "-") + to_string(v);
  return s;
}

void require_same_labels(const UndirectedNet& tree, const UndirectedNet& net) {
  if (tree.leaf_labels() != net.leaf_labels())
    throw LabelSetMismatch("tree and network have different leaf sets");
}

void require_tree(const UndirectedNet& tree) {
  if (!validate_unrooted(tree).ok() || reticulation_number(tree) != 0)
    throw NotATree("first argument is not a phylogenetic tree");
}

std::vector<VertexId> sorted_neighbors(const UndirectedNet& net, VertexId v) {
  auto nb = net.neighbors(v);
  std::vector<VertexId> out(nb.begin(), nb.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::set<VertexId> side_of(const UndirectedNet& net, const Edge& e) {
  std::set<VertexId> side{e.a};
  std::vector<VertexId> stack{e.a};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : net.neighbors(v)) {
      if ((v == e.a && w == e.b) || (v == e.b && w == e.a)) continue;
      if (side.insert(w).second) stack.push_back(w);
    }
  }
  return side;
}

UndirectedNet induced(const UndirectedNet& net, const std::set<VertexId>& keep) {
  UndirectedNet out;
  for (VertexId v : keep) {
    out.add_vertex(v);
    if (auto l = net.label(v)) out.set_label(v, std::string(*l));
  }
  for (const Edge& e : net.edges())
    if (keep.contains(e.a) && keep.contains(e.b)) out.add_edge(e.a, e.b);
  out.reserve_ids_from(net.next_id());
  return out;
}

std::set<Edge> path_edges(const Path& p) {
  std::set<Edge> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace(p[i], p[i + 1]);
  return out;
}

bool edge_disjoint(const Path& a, const Path& b) {
  auto ea = path_edges(a);
  for (const Edge& e : path_edges(b))
    if (ea.contains(e)) return false;
  return true;
}

std::optional<VertexId> leaf_neighbor(const UndirectedNet& net, VertexId v) {
  for (VertexId w : net.neighbors(v))
    if (net.is_leaf(w)) return w;
  return std::nullopt;
}

// {x,y} is a cherry of T hanging, together with z, from a common vertex.
bool tree_has_triple(const UndirectedNet& tree, const std::string& x, const std::string& y, const std::string& z) {
  auto vx = tree.find_leaf(x), vy = tree.find_leaf(y), vz = tree.find_leaf(z);
  if (!vx || !vy || !vz) return false;
  if (tree.degree(*vx) != 1 || tree.degree(*vy) != 1 || tree.degree(*vz) != 1) return false;
  VertexId p = tree.neighbors(*vx)[0];
  if (tree.neighbors(*vy)[0] != p || tree.is_leaf(p)) return false;
  VertexId zq = tree.neighbors(*vz)[0];
  for (VertexId q : tree.neighbors(p))
    if (q != *vx && q != *vy) return q == zq && !tree.is_leaf(q);
  return false;
}

// First internal vertex of `p` (from its start) other than `avoid` whose
// third edge leaves the path.
std::optional<Edge> edge_leaving_path(const UndirectedNet& net, const Path& p, VertexId avoid) {
  std::set<VertexId> on(p.begin(), p.end());
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (p[i] == avoid) continue;
    for (VertexId w : sorted_neighbors(net, p[i]))
      if (!on.contains(w)) return Edge(p[i], w);
  }
  return std::nullopt;
}

RuleOutcome reduced(int rule, std::string sub_case, const UndirectedNet& net, const Edge& e, std::string cert) {
  RuleOutcome o;
  o.verdict = Verdict::Reduced;
  o.rule = rule;
  o.sub_case = std::move(sub_case);
  o.reduced_net = eliminate_edge(net, e);
  o.eliminated = e;
  o.certificate = std::move(cert);
  return o;
}

RuleOutcome decided(Verdict v, int rule, std::string sub_case, std::string cert) {
  RuleOutcome o;
  o.verdict = v;
  o.rule = rule;
  o.sub_case = std::move(sub_case);
  o.certificate = std::move(cert);
  return o;
}

std::optional<RuleOutcome> rule_three_chain(const UndirectedNet& tree, const UndirectedNet& net,
                                            const std::set<Edge>& cut) {
  auto lab = [&](VertexId leaf) { return std::string(*net.label(leaf)); };
  for (VertexId v2 : net.vertices()) {
    if (net.is_leaf(v2)) continue;
    auto x = leaf_neighbor(net, v2);
    if (!x) continue;
    for (VertexId v3 : sorted_neighbors(net, v2)) {
      if (net.is_leaf(v3) || cut.contains(Edge(v2, v3))) continue;
      auto y = leaf_neighbor(net, v3);
      if (!y) continue;
      for (VertexId v4 : sorted_neighbors(net, v3)) {
        if (v4 == v2 || net.is_leaf(v4) || cut.contains(Edge(v3, v4))) continue;
        auto z = leaf_neighbor(net, v4);
        if (!z) continue;
        if (!tree_has_triple(tree, lab(*x), lab(*y), lab(*z))) continue;
        for (VertexId v1 : sorted_neighbors(net, v2)) {
          if (v1 == v3 || v1 == v4 || net.is_leaf(v1) || cut.contains(Edge(v1, v2))) continue;
          std::string cert = "path " + path_str({v1, v2, v3, v4}) + " with leaves " + lab(*x) + "," + lab(*y) + "," +
                             lab(*z);
          return reduced(2, "", net, Edge(v1, v2), cert);
        }
      }
    }
  }
  return std::nullopt;
}

RuleOutcome rule_pendant_triple(const UndirectedNet& net, const PendantTriple& t) {
  VertexId vx = *net.find_leaf(t.x), vy = *net.find_leaf(t.y), vz = *net.find_leaf(t.z);
  auto p = entangled_path(net, vx, vy);
  if (!p) return decided(Verdict::No, 3, "I", "no entangled path between " + t.x + " and " + t.y);
  for (std::size_t i = 1; i + 1 < p->size(); ++i) {
    VertexId v = (*p)[i];
    auto q = entangled_path(net, vz, v);
    if (!q || !edge_disjoint(*p, *q)) continue;
    auto e = edge_leaving_path(net, *p, v);
    if (!e) throw std::logic_error("no edge leaves the entangled path");
    return reduced(3, "III", net, *e,
                   "P=" + path_str(*p) + " P'=" + path_str(*q) + " triple " + t.x + "," + t.y + "," + t.z);
  }
  return decided(Verdict::No, 3, "II",
                 "no entangled path from " + t.z + " to an inner vertex of " + path_str(*p) + " avoiding its edges");
}

RuleOutcome rule_pendant_quad(const UndirectedNet& net, const PendantQuad& q) {
  auto leaf = [&](const std::string& l) { return *net.find_leaf(l); };
  auto p1 = entangled_path(net, leaf(q.x), leaf(q.y));
  auto p2 = entangled_path(net, leaf(q.w), leaf(q.z));
  if (!p1) return decided(Verdict::No, 4, "I", "no entangled path between " + q.x + " and " + q.y);
  if (!p2) return decided(Verdict::No, 4, "I", "no entangled path between " + q.w + " and " + q.z);
  if (!edge_disjoint(*p1, *p2))
    return decided(Verdict::No, 4, "II", "entangled paths " + path_str(*p1) + " and " + path_str(*p2) + " share an edge");
  for (std::size_t i = 1; i + 1 < p1->size(); ++i)
    for (std::size_t j = 1; j + 1 < p2->size(); ++j) {
      VertexId v1 = (*p1)[i], v2 = (*p2)[j];
      auto p3 = entangled_path(net, v1, v2);
      if (!p3 || p3->size() < 3 || !edge_disjoint(*p3, *p1) || !edge_disjoint(*p3, *p2)) continue;
      auto e = edge_leaving_path(net, *p1, v1);
      if (!e) throw std::logic_error("no edge leaves the entangled path");
      return reduced(4, "IV", net, *e,
                     "P1=" + path_str(*p1) + " P2=" + path_str(*p2) + " P3=" + path_str(*p3));
    }
  return decided(Verdict::No, 4, "III",
                 "no entangled path of two or more edges joins " + path_str(*p1) + " and " + path_str(*p2));
}

RuleOutcome reduce_once(const UndirectedNet& tree, const UndirectedNet& net) {
  const std::size_t leaves = net.leaf_count();
  if (leaves <= 3) return decided(Verdict::Yes, 1, "", std::to_string(leaves) + " leaves");
  auto d = decompose(net);
  if (auto o = rule_three_chain(tree, net, d.cut)) return *o;
  auto triples = pendant_triples(tree);
  if (leaves > 4 && !triples.empty()) return rule_pendant_triple(net, triples.front());
  if (leaves == 4) {
    for (const PendantTriple& t : triples)
      if (!entangled_path(net, *net.find_leaf(t.x), *net.find_leaf(t.y)))
        return decided(Verdict::No, 3, "I", "no entangled path between " + t.x + " and " + t.y);
  }
  if (leaves > 5) {
    auto s = find_pendant_structures(tree);
    if (auto* q = std::get_if<PendantQuad>(&s)) return rule_pendant_quad(net, *q);
  }
  throw std::logic_error("no reduction rule applies");
}

std::optional<Edge> nontrivial_cut_edge(const UndirectedNet& net) {
  for (const Edge& e : cut_edges(net))
    if (!net.is_leaf(e.a) && !net.is_leaf(e.b)) return e;
  return std::nullopt;
}

}  // namespace

EmbeddingCheck verify_embedding(const UndirectedNet& tree, const UndirectedNet& net, const Embedding& emb) {
  require_same_labels(tree, net);
  auto fail = [](int prop, std::string msg) { return EmbeddingCheck{false, prop, std::move(msg)}; };
  for (VertexId t : tree.vertices()) {
    auto it = emb.vertex_map.find(t);
    if (it == emb.vertex_map.end()) return fail(1, "tree vertex " + to_string(t) + " has no image");
    if (!net.has_vertex(it->second))
      return fail(1, "image " + to_string(it->second) + " of " + to_string(t) + " is not a network vertex");
  }
  for (VertexId t : tree.leaves()) {
    VertexId img = emb.vertex_map.at(t);
    if (net.label(img) != tree.label(t))
      return fail(2, "leaf " + std::string(*tree.label(t)) + " is not mapped to itself");
  }
  std::set<VertexId> images;
  for (VertexId t : tree.vertices())
    if (!images.insert(emb.vertex_map.at(t)).second)
      return fail(3, "vertex " + to_string(emb.vertex_map.at(t)) + " is the image of two tree vertices");
  auto tree_edges = tree.edges();
  if (emb.edge_map.size() != tree_edges.size()) return fail(4, "edge images do not match the tree edges");
  std::set<Edge> used;
  for (const Edge& e : tree_edges) {
    auto it = emb.edge_map.find(e);
    if (it == emb.edge_map.end()) return fail(4, "tree edge " + edge_str(e) + " has no image");
    const Path& p = it->second;
    if (p.empty()) return fail(4, "image of " + edge_str(e) + " is empty");
    VertexId a = emb.vertex_map.at(e.a), b = emb.vertex_map.at(e.b);
    if (!((p.front() == a && p.back() == b) || (p.front() == b && p.back() == a)))
      return fail(4, "image of " + edge_str(e) + " has the wrong ends");
    if (std::set<VertexId>(p.begin(), p.end()).size() != p.size())
      return fail(4, "image of " + edge_str(e) + " repeats a vertex");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!net.has_vertex(p[i]) || !net.has_vertex(p[i + 1]) || !net.has_edge(p[i], p[i + 1]))
        return fail(4, "image of " + edge_str(e) + " uses a non-edge");
  }
  for (const Edge& e : tree_edges)
    for (const Edge& f : path_edges(emb.edge_map.at(e)))
      if (!used.insert(f).second) return fail(5, "network edge " + edge_str(f) + " is used twice");
  return {};
}

std::optional<std::pair<Split, Split>> conflicting_split(const UndirectedNet& tree, const UndirectedNet& net) {
  std::vector<Split> tree_splits;
  for (const Edge& e : tree.edges())
    if (auto s = split_of_cut_edge(tree, e)) tree_splits.push_back(*s);
  for (const Edge& e : cut_edges(net)) {
    auto s = split_of_cut_edge(net, e);
    if (!s) continue;
    for (const Split& t : tree_splits)
      if (!s->compatible(t)) return std::make_pair(*s, t);
  }
  return std::nullopt;
}

BranchResult branch_on_cut_edge(const UndirectedNet& tree, const UndirectedNet& net, const Edge& e, int k) {
  if (!is_cut_edge(net, e)) throw NotCutEdge("edge " + edge_str(e) + " is not a cut-edge");
  if (net.is_leaf(e.a) || net.is_leaf(e.b)) throw TrivialCutEdge("edge " + edge_str(e) + " ends at a leaf");
  auto split = split_of_cut_edge(net, e);
  if (!split) throw NoMatchingTreeEdge("edge " + edge_str(e) + " has a side without leaves");
  auto taken = [&](const std::string& l) { return net.find_leaf(l) || tree.find_leaf(l); };
  auto name = [](int k, int side) { return "_b" + std::to_string(k) + "." + std::to_string(side); };
  while (taken(name(k, 1)) || taken(name(k, 2))) ++k;

  BranchResult r;
  r.x1 = name(k, 1);
  r.x2 = name(k, 2);
  r.split = *split;
  std::set<VertexId> u_side = side_of(net, e);
  std::set<VertexId> v_side;
  for (VertexId v : net.vertices())
    if (!u_side.contains(v)) v_side.insert(v);
  std::string probe;
  for (VertexId v : u_side)
    if (auto l = net.label(v)) {
      probe = std::string(*l);
      break;
    }

  std::optional<Edge> te;
  for (const Edge& f : tree.edges())
    if (split_of_cut_edge(tree, f) == split) {
      te = f;
      break;
    }
  if (!te) throw NoMatchingTreeEdge("no tree edge induces " + split->to_string());
  std::set<VertexId> t_side = side_of(tree, *te);
  VertexId tu = te->a, tv = te->b;
  if (!t_side.contains(*tree.find_leaf(probe))) {
    std::swap(tu, tv);
    std::set<VertexId> other;
    for (VertexId v : tree.vertices())
      if (!t_side.contains(v)) other.insert(v);
    t_side = std::move(other);
  }
  std::set<VertexId> t_rest;
  for (VertexId v : tree.vertices())
    if (!t_side.contains(v)) t_rest.insert(v);

  auto hang = [](UndirectedNet g, VertexId at, const std::string& label) {
    VertexId x = g.add_leaf(label);
    g.add_edge(at, x);
    return g;
  };
  r.first.net = hang(induced(net, u_side), e.a, r.x1);
  r.second.net = hang(induced(net, v_side), e.b, r.x2);
  r.first.tree = hang(induced(tree, t_side), tu, r.x1);
  r.second.tree = hang(induced(tree, t_rest), tv, r.x2);
  return r;
}

bool is_entangled(const UndirectedNet& net, const Path& path) {
  auto cut = decompose(net).cut;
  auto on = path_edges(path);
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    for (VertexId w : net.neighbors(path[i])) {
      Edge e(path[i], w);
      if (cut.contains(e) && !on.contains(e)) return false;
    }
  return true;
}

std::optional<Path> entangled_path(const UndirectedNet& net, VertexId u, VertexId v) {
  if (!net.has_vertex(u) || !net.has_vertex(v)) throw UnknownVertex("endpoint is not a network vertex");
  if (u == v) return Path{u};
  std::unordered_set<VertexId> removed;
  for (const Edge& e : cut_edges(net))
    if (!e.has(u) && !e.has(v)) {
      removed.insert(e.a);
      removed.insert(e.b);
    }
  std::unordered_map<VertexId, VertexId> parent;
  parent.emplace(u, u);
  std::deque<VertexId> queue{u};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (VertexId w : sorted_neighbors(net, x)) {
      if (removed.contains(w) || parent.contains(w)) continue;
      parent.emplace(w, x);
      queue.push_back(w);
    }
  }
  if (!parent.contains(v)) return std::nullopt;
  Path p;
  for (VertexId x = v; x != u; x = parent.at(x)) p.push_back(x);
  p.push_back(u);
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<PendantTriple> pendant_triples(const UndirectedNet& tree) {
  std::vector<PendantTriple> out;
  for (VertexId p : tree.vertices()) {
    if (tree.is_leaf(p)) continue;
    std::vector<std::string> leaves;
    std::optional<VertexId> q;
    for (VertexId w : tree.neighbors(p)) {
      if (tree.is_leaf(w))
        leaves.emplace_back(*tree.label(w));
      else
        q = w;
    }
    if (leaves.size() != 2 || !q) continue;
    std::sort(leaves.begin(), leaves.end());
    for (VertexId z : tree.neighbors(*q))
      if (z != p && tree.is_leaf(z)) out.push_back({leaves[0], leaves[1], std::string(*tree.label(z))});
  }
  std::sort(out.begin(), out.end(), [](const PendantTriple& a, const PendantTriple& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  return out;
}

PendantStructure find_pendant_structures(const UndirectedNet& tree) {
  if (tree.leaf_count() < 4)
    throw TooFewLeaves("pendant structures need at least four leaves, got " + std::to_string(tree.leaf_count()));
  auto triples = pendant_triples(tree);
  if (!triples.empty()) return triples.front();
  // Cherry parents, keyed by vertex.
  std::map<VertexId, std::pair<std::string, std::string>> cherry;
  for (VertexId p : tree.vertices()) {
    if (tree.is_leaf(p)) continue;
    std::vector<std::string> leaves;
    for (VertexId w : tree.neighbors(p))
      if (tree.is_leaf(w)) leaves.emplace_back(*tree.label(w));
    if (leaves.size() == 2) {
      std::sort(leaves.begin(), leaves.end());
      cherry[p] = {leaves[0], leaves[1]};
    }
  }
  std::vector<PendantQuad> quads;
  for (VertexId q : tree.vertices()) {
    if (tree.is_leaf(q)) continue;
    std::vector<std::pair<std::string, std::string>> around;
    for (VertexId w : tree.neighbors(q))
      if (auto it = cherry.find(w); it != cherry.end()) around.push_back(it->second);
    std::sort(around.begin(), around.end());
    for (std::size_t i = 0; i < around.size(); ++i)
      for (std::size_t j = i + 1; j < around.size(); ++j)
        quads.push_back({around[j].first, around[i].first, around[i].second, around[j].second});
  }
  if (quads.empty()) throw std::logic_error("tree has neither a pendant triple nor a pendant quad");
  return *std::min_element(quads.begin(), quads.end(), [](const PendantQuad& a, const PendantQuad& b) {
    return std::tie(a.x, a.y, a.w, a.z) < std::tie(b.x, b.y, b.w, b.z);
  });
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Reduced: return "reduced";
  }
  return "unknown";
}

RuleOutcome apply_reduction(const UndirectedNet& tree, const UndirectedNet& net) {
  require_same_labels(tree, net);
  if (auto e = nontrivial_cut_edge(net)) throw NotSimple("cut-edge " + edge_str(*e) + " is not pendant");
  if (!is_q_cuttable(net, 3).is_cuttable) throw NotThreeCuttable("network is not 3-cuttable");
  return reduce_once(tree, net);
}

std::string to_string(TraceKind k) {
  switch (k) {
    case TraceKind::SplitConflict: return "SPLIT-CONFLICT";
    case TraceKind::Branch: return "BRANCH";
    case TraceKind::Rule: return "RULE";
    case TraceKind::Elim: return "ELIM";
    case TraceKind::Yes: return "YES";
    case TraceKind::No: return "NO";
  }
  return "UNKNOWN";
}

ContainmentResult three_cuttable_tc(const UndirectedNet& tree, const UndirectedNet& net, bool snapshots) {
  require_tree(tree);
  require_same_labels(tree, net);
  if (!is_q_cuttable(net, 3).is_cuttable) throw NotThreeCuttable("network is not 3-cuttable");

  ContainmentResult result;
  result.displays = true;
  auto emit = [&](TraceKind kind, const std::string& tag, std::string detail) -> TraceEvent& {
    result.trace.push_back(TraceEvent{kind, tag, std::move(detail), std::nullopt, std::nullopt, std::nullopt});
    return result.trace.back();
  };

  struct Work {
    std::string tag;
    UndirectedNet tree, net;
  };
  std::vector<Work> stack{{"0", tree, net}};
  int fresh = 0;
  while (!stack.empty() && result.displays) {
    Work w = std::move(stack.back());
    stack.pop_back();
    if (auto c = conflicting_split(w.tree, w.net)) {
      emit(TraceKind::SplitConflict, w.tag, c->first.to_string() + " " + c->second.to_string());
      emit(TraceKind::No, w.tag, "conflicting split");
      result.displays = false;
      break;
    }
    if (auto e = nontrivial_cut_edge(w.net)) {
      BranchResult br = branch_on_cut_edge(w.tree, w.net, *e, fresh++);
      auto& ev = emit(TraceKind::Branch, w.tag,
                      edge_str(*e) + " " + br.split.to_string() + " -> " + w.tag + ".1 " + w.tag + ".2 " + br.x1 +
                          " " + br.x2);
      if (snapshots) {
        ev.tree = w.tree;
        ev.before = w.net;
      }
      stack.push_back({w.tag + ".2", std::move(br.second.tree), std::move(br.second.net)});
      stack.push_back({w.tag + ".1", std::move(br.first.tree), std::move(br.first.net)});
      continue;
    }
    RuleOutcome o = reduce_once(w.tree, w.net);
    emit(TraceKind::Rule, w.tag, std::to_string(o.rule) + (o.sub_case.empty() ? "" : " " + o.sub_case));
    if (o.verdict == Verdict::Reduced) {
      auto& ev = emit(TraceKind::Elim, w.tag, to_string(o.eliminated->a) + " " + to_string(o.eliminated->b));
      if (snapshots) {
        ev.tree = w.tree;
        ev.before = w.net;
        ev.after = *o.reduced_net;
      }
      stack.push_back({w.tag, std::move(w.tree), std::move(*o.reduced_net)});
    } else if (o.verdict == Verdict::Yes) {
      emit(TraceKind::Yes, w.tag, o.certificate);
    } else {
      emit(TraceKind::No, w.tag, o.certificate);
      result.displays = false;
    }
  }
  return result;
}

std::string serialize_trace(const std::vector<TraceEvent>& trace) {
  std::string out = "TCTRACE/1\n";
  for (const auto& ev : trace) {
    out += ev.instance + " " + to_string(ev.kind);
    if (!ev.detail.empty()) out += " " + ev.detail;
    out += "\n";
  }
  return out;
}

}  // namespace tcnet
