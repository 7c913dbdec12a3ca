#include "tcnet/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "dense.hpp"
#include "tcnet/edit.hpp"
#include "tcnet/error.hpp"

namespace tcnet {

namespace detail {

std::vector<bool> bridge_mask(const Dense& g) {
  const int n = g.n();
  std::vector<bool> bridge(g.m(), false);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < g.adj[f.v].size()) {
        auto [w, k] = g.adj[f.v][f.next++];
        if (k == f.parent_edge) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, k, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > disc[p]) bridge[done.parent_edge] = true;
        }
      }
    }
  }
  return bridge;
}

}  // namespace detail

std::vector<Edge> Chain::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < path_vertices.size(); ++i)
    out.emplace_back(path_vertices[i], path_vertices[i + 1]);
  return out;
}

Split Split::make(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.empty() || (!b.empty() && b.front() < a.front())) std::swap(a, b);
  return Split{std::move(a), std::move(b)};
}

namespace {

bool intersects(const std::vector<std::string>& x, const std::vector<std::string>& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i];
  }
  return s;
}

}  // namespace

bool Split::compatible(const Split& o) const {
  return !intersects(side_a, o.side_a) || !intersects(side_a, o.side_b) ||
         !intersects(side_b, o.side_a) || !intersects(side_b, o.side_b);
}

std::string Split::to_string() const { return join(side_a) + "|" + join(side_b); }

Decomposition decompose(const UndirectedNet& net) {
  detail::Dense g(net);
  auto bridge = detail::bridge_mask(g);
  Decomposition d;
  for (int k = 0; k < g.m(); ++k) {
    if (!bridge[k]) continue;
    Edge e = g.edge(k);
    d.cut.insert(e);
    d.cut_incident.insert(e.a);
    d.cut_incident.insert(e.b);
  }
  std::vector<int> comp(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    bool has_edge = false;
    for (auto [w, k] : g.adj[s])
      if (!bridge[k]) has_edge = true;
    if (!has_edge) continue;
    int id = static_cast<int>(d.blobs.size());
    Blob b;
    std::vector<int> stack{s};
    comp[s] = id;
    std::vector<bool> edge_taken;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      b.vertices.push_back(g.ids[v]);
      for (auto [w, k] : g.adj[v]) {
        if (bridge[k]) continue;
        if (g.edges[k].first == v) b.edges.push_back(g.edge(k));
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    std::sort(b.edges.begin(), b.edges.end());
    for (VertexId v : b.vertices) d.blob_of.emplace(v, id);
    d.blobs.push_back(std::move(b));
  }
  return d;
}

std::vector<Edge> cut_edges(const UndirectedNet& net) {
  auto d = decompose(net);
  return {d.cut.begin(), d.cut.end()};
}

std::vector<Blob> blobs(const UndirectedNet& net) { return decompose(net).blobs; }

std::vector<Chain> maximal_chains(const UndirectedNet& net) {
  auto d = decompose(net);
  std::vector<Chain> out;
  auto in_chain = [&](VertexId v, int blob) {
    return d.cut_incident.contains(v) && d.blob_index(v) == blob;
  };
  auto cut_edge_at = [&](VertexId v) {
    for (VertexId w : net.neighbors(v))
      if (d.cut.contains(Edge(v, w))) return Edge(v, w);
    throw std::logic_error("chain vertex without cut-edge");
  };
  std::set<VertexId> done;
  for (std::size_t bi = 0; bi < d.blobs.size(); ++bi) {
    int blob = static_cast<int>(bi);
    for (VertexId start : d.blobs[bi].vertices) {
      if (done.contains(start) || !in_chain(start, blob)) continue;
      // Collect the component of chain vertices containing `start`.
      std::vector<VertexId> comp;
      std::vector<VertexId> stack{start};
      std::set<VertexId> seen{start};
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (VertexId w : net.neighbors(v))
          if (!d.cut.contains(Edge(v, w)) && in_chain(w, blob) && seen.insert(w).second)
            stack.push_back(w);
      }
      std::sort(comp.begin(), comp.end());
      auto chain_nbrs = [&](VertexId v) {
        std::vector<VertexId> nb;
        for (VertexId w : net.neighbors(v))
          if (w != v && !d.cut.contains(Edge(v, w)) && in_chain(w, blob)) nb.push_back(w);
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        return nb;
      };
      VertexId first = comp.front();
      bool closed = true;
      for (VertexId v : comp) {
        auto nb = chain_nbrs(v);
        if (nb.size() > 2) throw std::logic_error("chain vertex with more than two chain neighbors");
        if (nb.size() < 2 && closed) {
          closed = false;
          first = v;
        }
      }
      if (comp.size() < 3) closed = false;
      Chain c;
      c.closed = closed;
      VertexId prev = first, cur = first;
      c.path_vertices.push_back(first);
      auto nb0 = chain_nbrs(first);
      if (!nb0.empty()) {
        cur = nb0.front();
        while (true) {
          c.path_vertices.push_back(cur);
          auto nb = chain_nbrs(cur);
          VertexId next = cur;
          for (VertexId w : nb)
            if (w != prev) next = w;
          if (next == cur || next == first) break;
          prev = cur;
          cur = next;
        }
      }
      for (VertexId v : c.path_vertices) {
        c.incident_cut_edges.push_back(cut_edge_at(v));
        done.insert(v);
      }
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Chain& a, const Chain& b) { return a.path_vertices.front() < b.path_vertices.front(); });
  return out;
}

std::optional<Split> split_of_cut_edge(const UndirectedNet& net, const Edge& e) {
  if (!is_cut_edge(net, e))
    throw NotCutEdge("edge " + to_string(e.a) + "-" + to_string(e.b) + " is not a cut-edge");
  std::set<VertexId> side{e.a};
  std::vector<VertexId> stack{e.a};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : net.neighbors(v)) {
      if (v == e.a && w == e.b) continue;
      if (side.insert(w).second) stack.push_back(w);
    }
  }
  std::vector<std::string> a, b;
  for (const auto& [v, l] : net.labeled_vertices()) (side.contains(v) ? a : b).push_back(l);
  if (a.empty() || b.empty()) return std::nullopt;
  return Split::make(std::move(a), std::move(b));
}

int reticulation_number(const UndirectedNet& net) {
  return static_cast<int>(net.edge_count()) - static_cast<int>(net.vertex_count()) + 1;
}

int reticulation_number(const RootedNet& net) {
  return static_cast<int>(net.reticulation_count());
}

int level(const UndirectedNet& net) {
  int best = 0;
  for (const Blob& b : blobs(net)) best = std::max(best, b.cycle_rank());
  return best;
}

std::vector<std::vector<VertexId>> components(const UndirectedNet& net) {
  std::vector<std::vector<VertexId>> out;
  std::set<VertexId> seen;
  for (VertexId s : net.vertices()) {
    if (!seen.insert(s).second) continue;
    std::vector<VertexId> comp;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : net.neighbors(v))
        if (seen.insert(w).second) stack.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace tcnet
