#include "tcnet/orient.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "dense.hpp"
#include "tcnet/cuttable.hpp"
#include "tcnet/edit.hpp"
#include "tcnet/error.hpp"
#include "tcnet/structure.hpp"
#include "tcnet/validate.hpp"

namespace tcnet {

namespace {

std::string edge_str(const Edge& e) { return "{" + to_string(e.a) + "," + to_string(e.b) + "}"; }

// Returns a directed cycle as a vertex list, or empty.
std::vector<VertexId> directed_cycle(const RootedNet& net) {
  std::unordered_map<VertexId, int> state;
  std::unordered_map<VertexId, VertexId> parent;
  for (VertexId s : net.vertices()) {
    if (state[s]) continue;
    struct Frame {
      VertexId v;
      std::size_t next;
    };
    std::vector<Frame> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto ch = net.children(f.v);
      if (f.next == ch.size()) {
        state[f.v] = 2;
        stack.pop_back();
        continue;
      }
      VertexId w = ch[f.next++];
      if (state[w] == 1) {
        std::vector<VertexId> cyc;
        for (VertexId x = f.v; x != w; x = parent[x]) cyc.push_back(x);
        cyc.push_back(w);
        std::reverse(cyc.begin(), cyc.end());
        return cyc;
      }
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = f.v;
        stack.push_back({w, 0});
      }
    }
  }
  return {};
}

}  // namespace

RootedNet apply_orientation(const UndirectedNet& net, const OrientationSpec& spec) {
  const Edge re = spec.root_edge;
  if (!net.has_edge(re)) throw InvalidOrientationSpec("root edge " + edge_str(re) + " is not an edge");
  const VertexId rho = net.next_id();
  for (const auto& [e, a] : spec.direction) {
    if (a.edge() != e) throw InvalidOrientationSpec("arc does not match edge " + edge_str(e));
    if (e == re) throw InvalidOrientationSpec("the root edge is subdivided, not directed");
    if (e.has(rho) && re.has(e.other(rho))) {
      if (a.tail != rho) throw InvalidOrientationSpec("root edge halves must point away from the root");
      continue;
    }
    if (!net.has_edge(e)) throw InvalidOrientationSpec("edge " + edge_str(e) + " is not in the network");
  }
  RootedNet out;
  for (VertexId v : net.vertices()) {
    out.add_vertex(v);
    if (auto l = net.label(v)) out.set_label(v, std::string(*l));
  }
  out.add_vertex(rho);
  out.set_root(rho);
  out.add_arc(rho, re.a);
  out.add_arc(rho, re.b);
  for (const Edge& e : net.edges()) {
    if (e == re) continue;
    auto it = spec.direction.find(e);
    if (it == spec.direction.end()) throw InvalidOrientationSpec("edge " + edge_str(e) + " has no direction");
    out.add_arc(it->second);
  }
  for (VertexId v : out.vertices()) {
    if (v == rho) continue;
    std::size_t in = out.in_degree(v), o = out.out_degree(v);
    bool ok = net.degree(v) == 1 ? (in == 1 && o == 0) : ((in == 1 && o == 2) || (in == 2 && o == 1));
    if (!ok)
      throw DegreeViolation(v, "vertex " + to_string(v) + " gets in-degree " + std::to_string(in) +
                                   " and out-degree " + std::to_string(o));
  }
  auto cyc = directed_cycle(out);
  if (!cyc.empty()) {
    std::string s;
    for (VertexId v : cyc) s += (s.empty() ? "" : ",") + to_string(v);
    throw CyclicOrientation(cyc, "orientation has a directed cycle through " + s);
  }
  return out;
}

OrientationSpec spec_of(const RootedNet& rooted) {
  auto root = rooted.root();
  if (!root || rooted.out_degree(*root) != 2) throw InvalidOrientationSpec("network has no binary root");
  OrientationSpec spec;
  auto ch = rooted.children(*root);
  spec.root_edge = Edge(ch[0], ch[1]);
  for (const Arc& a : rooted.arcs()) {
    if (a.tail == *root) continue;
    spec.direction.emplace(a.edge(), a);
  }
  return spec;
}

bool is_tree_child(const RootedNet& net) {
  auto ret = [&](VertexId v) { return net.in_degree(v) >= 2; };
  bool by_definition = true;
  for (VertexId v : net.vertices()) {
    auto ch = net.children(v);
    if (ch.empty()) continue;
    if (std::all_of(ch.begin(), ch.end(), ret)) by_definition = false;
  }
  bool no_stack = true, no_siblings = true;
  for (VertexId v : net.vertices()) {
    auto ch = net.children(v);
    for (VertexId c : ch)
      if (ret(v) && ret(c)) no_stack = false;
    for (std::size_t i = 0; i < ch.size(); ++i)
      for (std::size_t j = i + 1; j < ch.size(); ++j)
        if (ch[i] != ch[j] && ret(ch[i]) && ret(ch[j])) no_siblings = false;
  }
  bool by_structure = no_stack && no_siblings;
  if (by_definition != by_structure)
    throw std::logic_error("tree-child definition and stack/sibling characterization disagree");
  return by_definition;
}

UndirectedNet underlying_unrooted(const RootedNet& net) {
  UndirectedNet out;
  for (VertexId v : net.vertices()) {
    out.add_vertex(v);
    if (auto l = net.label(v)) out.set_label(v, std::string(*l));
  }
  for (const Arc& a : net.arcs()) out.add_edge(a.tail, a.head);
  auto root = net.root();
  if (root && out.degree(*root) == 2) inplace::suppress(out, *root);
  return out;
}

std::set<Edge> chain_edge_set(const UndirectedNet& net) {
  auto d = decompose(net);
  std::set<Edge> s;
  for (const Edge& e : net.edges())
    if (!d.cut.contains(e) && d.cut_incident.contains(e.a) && d.cut_incident.contains(e.b)) s.insert(e);
  return s;
}

std::set<Edge> choose_s_prime(const UndirectedNet& net, const std::set<Edge>& s) {
  detail::Dense g(net);
  if (g.n() == 0) return {};
  int start = 0;
  for (int i = 0; i < g.n(); ++i)
    if (g.leaf[i]) {
      start = i;
      break;
    }
  std::vector<bool> in_tree(g.n(), false), tree_edge(g.m(), false);
  std::deque<std::pair<int, int>> frontier{{start, -1}};
  while (!frontier.empty()) {
    auto [v, k] = frontier.front();
    frontier.pop_front();
    if (in_tree[v]) continue;
    in_tree[v] = true;
    if (k >= 0) tree_edge[k] = true;
    for (auto [w, k2] : g.adj[v]) {
      if (in_tree[w]) continue;
      if (s.contains(g.edge(k2)))
        frontier.emplace_back(w, k2);
      else
        frontier.emplace_front(w, k2);
    }
  }
  std::set<Edge> sp;
  for (int k = 0; k < g.m(); ++k) {
    Edge e = g.edge(k);
    if (tree_edge[k]) continue;
    if (!s.contains(e))
      throw NotTwoCuttable("edges outside the chain edges contain a cycle through " + edge_str(e));
    sp.insert(e);
  }
  if (static_cast<int>(sp.size()) != reticulation_number(net))
    throw std::logic_error("deleted edge count differs from the reticulation number");
  // No vertex carries two deleted edges, and no kept edge joins two
  // vertices that each carry one.
  std::unordered_map<VertexId, int> carried;
  for (const Edge& e : sp) {
    if (++carried[e.a] > 1 || ++carried[e.b] > 1)
      throw std::logic_error("two deleted edges share a vertex");
  }
  for (const Edge& e : net.edges())
    if (!sp.contains(e) && carried.contains(e.a) && carried.contains(e.b) && !net.is_leaf(e.a) &&
        !net.is_leaf(e.b)) {
      bool cut = is_cut_edge(net, e);
      if (!cut) throw std::logic_error("kept edge joins two vertices with deleted edges");
    }
  return sp;
}

namespace {

struct AuxEdge {
  int e, f;
  VertexId inner_e, inner_f;
};

}  // namespace

RootedNet tree_child_orient_2cuttable(const UndirectedNet& net) {
  auto rep = is_q_cuttable(net, 2);
  if (!rep.is_cuttable) {
    std::string s;
    for (VertexId v : *rep.witness_cycle) s += (s.empty() ? "" : ",") + to_string(v);
    throw NotTwoCuttable("cycle " + s + " has no two consecutive cut-incident vertices");
  }
  if (net.edge_count() == 0) throw InvalidOrientationSpec("network has no edge to place the root on");
  auto d = decompose(net);
  const std::set<Edge> sp = choose_s_prime(net, chain_edge_set(net));
  OrientationSpec spec;
  spec.root_edge = *d.cut.begin();
  const VertexId rho = net.next_id();

  // Orient the spanning tree away from the root.
  std::unordered_map<VertexId, VertexId> parent;
  std::deque<VertexId> queue{spec.root_edge.a, spec.root_edge.b};
  parent[spec.root_edge.a] = rho;
  parent[spec.root_edge.b] = rho;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : net.neighbors(v)) {
      Edge e(v, w);
      if (e == spec.root_edge || sp.contains(e) || parent.contains(w)) continue;
      parent[w] = v;
      spec.direction[e] = Arc{v, w};
      queue.push_back(w);
    }
  }

  // Orient the deleted edges blob by blob.
  std::vector<Edge> sp_list(sp.begin(), sp.end());
  std::vector<std::optional<bool>> forward(sp_list.size());  // head = larger endpoint
  std::unordered_map<Edge, int> sp_index;
  for (int i = 0; i < static_cast<int>(sp_list.size()); ++i) sp_index[sp_list[i]] = i;
  auto head = [&](int i, bool fwd) { return fwd ? sp_list[i].b : sp_list[i].a; };

  for (int b = 0; b < static_cast<int>(d.blobs.size()); ++b) {
    const Blob& blob = d.blobs[b];
    VertexId entry;
    for (VertexId v : blob.vertices) {
      VertexId p = parent.at(v);
      if (p == rho || d.blob_index(p) != b) entry = v;
    }
    std::vector<int> nodes;
    for (const Edge& e : blob.edges)
      if (sp.contains(e)) nodes.push_back(sp_index.at(e));
    if (nodes.empty()) continue;

    auto in_blob = [&](VertexId x, VertexId y) {
      return !d.cut.contains(Edge(x, y)) && d.blob_index(x) == b && d.blob_index(y) == b;
    };
    std::vector<AuxEdge> aux;
    std::unordered_map<int, std::vector<int>> incident;
    for (int i : nodes) {
      const Edge e = sp_list[i];
      for (int side = 0; side < 2; ++side) {
        VertexId s = side ? e.b : e.a, t = side ? e.a : e.b;
        for (VertexId u : net.neighbors(t)) {
          if (u == s || !in_blob(t, u)) continue;
          for (VertexId v : net.neighbors(u)) {
            if (v == s || v == t || !in_blob(u, v)) continue;
            for (VertexId w : net.neighbors(v)) {
              if (w == s || w == t || w == u || !in_blob(v, w)) continue;
              auto it = sp_index.find(Edge(v, w));
              if (it == sp_index.end() || it->second <= i) continue;
              int k = static_cast<int>(aux.size());
              aux.push_back(AuxEdge{i, it->second, t, v});
              incident[i].push_back(k);
              incident[it->second].push_back(k);
            }
          }
        }
      }
    }

    auto violates = [&](const AuxEdge& a) {
      return head(a.e, *forward[a.e]) == a.inner_e && head(a.f, *forward[a.f]) == a.inner_f;
    };
    auto entry_ok = [&](int i) { return !sp_list[i].has(entry) || head(i, *forward[i]) != entry; };

    std::vector<bool> placed(sp_list.size(), false);
    for (int start : nodes) {
      if (placed[start]) continue;
      std::vector<int> comp_nodes{start};
      std::vector<int> comp_edges;
      placed[start] = true;
      for (std::size_t qi = 0; qi < comp_nodes.size(); ++qi) {
        for (int k : incident[comp_nodes[qi]]) {
          if (std::find(comp_edges.begin(), comp_edges.end(), k) == comp_edges.end()) comp_edges.push_back(k);
          int other = aux[k].e == comp_nodes[qi] ? aux[k].f : aux[k].e;
          if (!placed[other]) {
            placed[other] = true;
            comp_nodes.push_back(other);
          }
        }
      }
      std::sort(comp_edges.begin(), comp_edges.end());
      auto satisfied = [&] {
        for (int k : comp_edges)
          if (violates(aux[k])) return false;
        for (int i : comp_nodes)
          if (!entry_ok(i)) return false;
        return true;
      };
      // Walk the component from its lowest edge so that consecutive deleted
      // edges are traversed in the same direction; on a cycle one aux edge
      // is left out of the walk and only checked afterwards.
      std::vector<int> skip_choices{-1};
      if (comp_edges.size() >= comp_nodes.size()) skip_choices.assign(comp_edges.begin(), comp_edges.end());
      bool done = false;
      for (int skip : skip_choices) {
        for (int flip = 0; flip < 2 && !done; ++flip) {
          for (int i : comp_nodes) forward[i].reset();
          forward[start] = flip == 0;
          std::vector<int> order{start};
          bool consistent = true;
          for (std::size_t qi = 0; qi < order.size() && consistent; ++qi) {
            int x = order[qi];
            for (int k : incident[x]) {
              if (k == skip) continue;
              const AuxEdge& a = aux[k];
              bool x_is_e = a.e == x;
              int y = x_is_e ? a.f : a.e;
              VertexId inner_x = x_is_e ? a.inner_e : a.inner_f;
              VertexId inner_y = x_is_e ? a.inner_f : a.inner_e;
              bool x_inner = head(x, *forward[x]) == inner_x;
              bool want_y_inner = !x_inner;
              bool fwd_y = (sp_list[y].b == inner_y) == want_y_inner;
              if (forward[y]) {
                if (*forward[y] != fwd_y) consistent = false;
                continue;
              }
              forward[y] = fwd_y;
              order.push_back(y);
            }
          }
          if (consistent && satisfied()) done = true;
        }
        if (done) break;
      }
      if (!done && comp_nodes.size() <= 24) {
        for (std::uint32_t mask = 0; mask < (1u << comp_nodes.size()) && !done; ++mask) {
          for (std::size_t j = 0; j < comp_nodes.size(); ++j) forward[comp_nodes[j]] = ((mask >> j) & 1) == 0;
          done = satisfied();
        }
      }
      if (!done) throw std::logic_error("no admissible direction for deleted edges in a blob");
    }
  }
  for (int i = 0; i < static_cast<int>(sp_list.size()); ++i) {
    const Edge& e = sp_list[i];
    spec.direction[e] = *forward[i] ? Arc{e.a, e.b} : Arc{e.b, e.a};
  }

  RootedNet out = apply_orientation(net, spec);
  if (!validate_rooted(out).ok()) throw std::logic_error("constructed orientation is not a rooted network");
  if (!is_tree_child(out)) throw std::logic_error("constructed orientation is not tree-child");
  if (reticulation_number(out) != reticulation_number(net))
    throw std::logic_error("constructed orientation changed the reticulation number");
  if (underlying_unrooted(out).edges() != net.edges())
    throw std::logic_error("constructed orientation does not cover the input edges");
  return out;
}

std::optional<RootedNet> brute_force_tree_child_orientation(const UndirectedNet& net, std::size_t max_steps) {
  detail::Dense g(net);
  const int n = g.n();
  if (g.m() == 0) return std::nullopt;
  const int rho = n;
  std::vector<int> deg(n + 1, 0), in(n + 1, 0), out(n + 1, 0);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(g.adj[v].size());
  deg[rho] = 2;
  std::vector<std::vector<int>> children(n + 1), parents(n + 1);
  std::size_t steps = 0;

  auto reaches = [&](int from, int to) {
    std::vector<int> stack{from};
    std::vector<bool> seen(n + 1, false);
    seen[from] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (int c : children[v])
        if (!seen[c]) {
          seen[c] = true;
          stack.push_back(c);
        }
    }
    return false;
  };
  auto out_complete = [&](int x) {
    return x == rho || out[x] == 2 || (in[x] == 2 && out[x] == 1) || (g.leaf[x] && in[x] == 1);
  };
  auto bad_children = [&](int x) {
    if (!out_complete(x) || children[x].empty()) return false;
    return std::all_of(children[x].begin(), children[x].end(), [&](int c) { return in[c] == 2; });
  };
  auto add = [&](int t, int h) {
    children[t].push_back(h);
    parents[h].push_back(t);
    ++out[t];
    ++in[h];
  };
  auto remove = [&](int t, int h) {
    children[t].pop_back();
    parents[h].pop_back();
    --out[t];
    --in[h];
  };

  for (int re = 0; re < g.m(); ++re) {
    auto [ra, rb] = g.edges[re];
    std::vector<int> free;
    for (int k = 0; k < g.m(); ++k)
      if (k != re) free.push_back(k);
    add(rho, ra);
    add(rho, rb);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
      if (++steps > max_steps) throw TooLarge("orientation search exceeded " + std::to_string(max_steps) + " steps");
      if (i == free.size()) return true;
      auto [a, b] = g.edges[free[i]];
      for (int dir = 0; dir < 2; ++dir) {
        int t = dir == 0 ? a : b, h = dir == 0 ? b : a;
        int cap_out_t = g.leaf[t] ? 0 : 2;
        int cap_in_h = g.leaf[h] ? 1 : 2;
        if (out[t] + 1 > cap_out_t || in[h] + 1 > cap_in_h) continue;
        if (reaches(h, t)) continue;
        add(t, h);
        bool ok = !bad_children(t);
        for (int p : parents[h]) ok = ok && !bad_children(p);
        if (ok && in[h] == 2) ok = !bad_children(h) && !(out_complete(h) && false);
        if (ok && assign(i + 1)) return true;
        remove(t, h);
      }
      return false;
    };
    bool found = assign(0);
    if (found) {
      OrientationSpec spec;
      spec.root_edge = g.edge(re);
      for (int v = 0; v < n; ++v)
        for (int c : children[v]) spec.direction[Edge(g.ids[v], g.ids[c])] = Arc{g.ids[v], g.ids[c]};
      RootedNet result = apply_orientation(net, spec);
      if (!is_tree_child(result)) throw std::logic_error("search produced a non-tree-child orientation");
      return result;
    }
    remove(rho, rb);
    remove(rho, ra);
  }
  return std::nullopt;
}

}  // namespace tcnet
