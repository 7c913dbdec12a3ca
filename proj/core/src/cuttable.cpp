#include "tcnet/cuttable.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dense.hpp"
#include "tcnet/error.hpp"
#include "tcnet/structure.hpp"

namespace tcnet {

namespace {

void check_q(int q) {
  if (q < 1) throw InvalidQ("q must be at least 1, got " + std::to_string(q));
}

// Finds a cycle in the graph restricted to live vertices and live edges,
// or returns an empty vector.
std::vector<int> find_cycle(const detail::Dense& g, const std::vector<bool>& live_v,
                            const std::vector<bool>& live_e) {
  std::vector<int> parent(g.n(), -1), parent_edge(g.n(), -1), state(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (!live_v[s] || state[s]) continue;
    struct Frame {
      int v;
      std::size_t next;
    };
    std::vector<Frame> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == g.adj[f.v].size()) {
        state[f.v] = 2;
        stack.pop_back();
        continue;
      }
      auto [w, k] = g.adj[f.v][f.next++];
      if (!live_e[k] || !live_v[w] || k == parent_edge[f.v]) continue;
      if (state[w] == 1) {
        std::vector<int> cyc;
        for (int x = f.v; x != w; x = parent[x]) cyc.push_back(x);
        cyc.push_back(w);
        return cyc;
      }
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = f.v;
        parent_edge[w] = k;
        stack.push_back({w, 0});
      }
    }
  }
  return {};
}

bool adjacent_live(const detail::Dense& g, int a, int b, const std::vector<bool>& live_e) {
  for (auto [w, k] : g.adj[a])
    if (w == b && live_e[k]) return true;
  return false;
}

// Repeatedly shortcuts the cycle along chords until none remain.
std::vector<int> chordless(const detail::Dense& g, std::vector<int> cyc, const std::vector<bool>& live_e) {
  bool changed = true;
  while (changed) {
    changed = false;
    const int L = static_cast<int>(cyc.size());
    for (int i = 0; i < L && !changed; ++i)
      for (int j = i + 2; j < L && !changed; ++j) {
        if (i == 0 && j == L - 1) continue;
        if (!adjacent_live(g, cyc[i], cyc[j], live_e)) continue;
        std::vector<int> shorter(cyc.begin() + i, cyc.begin() + j + 1);
        cyc = std::move(shorter);
        changed = true;
      }
  }
  return cyc;
}

std::vector<VertexId> canonical_cycle(const detail::Dense& g, const std::vector<int>& cyc) {
  std::vector<VertexId> ids;
  for (int x : cyc) ids.push_back(g.ids[x]);
  auto lowest = std::min_element(ids.begin(), ids.end());
  std::rotate(ids.begin(), lowest, ids.end());
  if (ids.size() > 2 && ids.back() < ids[1]) std::reverse(ids.begin() + 1, ids.end());
  return ids;
}

}  // namespace

CuttabilityReport is_q_cuttable(const UndirectedNet& net, int q) {
  check_q(q);
  detail::Dense g(net);
  std::vector<bool> live_v(g.n(), true), live_e(g.m(), true);
  for (const Chain& c : maximal_chains(net))
    if (static_cast<int>(c.length()) >= q)
      for (VertexId v : c.path_vertices) live_v[g.index.at(v)] = false;
  CuttabilityReport r;
  r.q = q;
  auto cyc = find_cycle(g, live_v, live_e);
  if (cyc.empty()) return r;
  for (int k = 0; k < g.m(); ++k)
    live_e[k] = live_v[g.edges[k].first] && live_v[g.edges[k].second];
  r.is_cuttable = false;
  r.witness_cycle = canonical_cycle(g, chordless(g, cyc, live_e));
  return r;
}

bool is_q_cuttable_via_chain_deletion(const UndirectedNet& net, int q) {
  check_q(q);
  detail::Dense g(net);
  auto d = decompose(net);
  std::vector<bool> live_v(g.n(), true), live_e(g.m(), true);
  auto kill = [&](const Edge& e) {
    int a = g.index.at(e.a), b = g.index.at(e.b);
    for (auto [w, k] : g.adj[a])
      if (w == b && live_e[k]) {
        live_e[k] = false;
        return;
      }
  };
  for (const Chain& c : maximal_chains(net)) {
    if (static_cast<int>(c.length()) < q) continue;
    auto es = c.edges();
    if (!es.empty()) {
      kill(*std::min_element(es.begin(), es.end()));
      continue;
    }
    VertexId v = c.path_vertices.front();
    std::vector<Edge> inc;
    for (VertexId w : net.neighbors(v))
      if (!d.cut.contains(Edge(v, w))) inc.emplace_back(v, w);
    if (!inc.empty()) kill(*std::min_element(inc.begin(), inc.end()));
  }
  return find_cycle(g, live_v, live_e).empty();
}

std::vector<std::vector<VertexId>> enumerate_cycles(const UndirectedNet& net, std::size_t max_cycles) {
  detail::Dense g(net);
  auto bridge = detail::bridge_mask(g);
  std::vector<std::vector<VertexId>> out;
  std::vector<int> path;
  std::vector<bool> on_path(g.n(), false);
  std::size_t steps = 0;
  const std::size_t max_steps = max_cycles * 1000;
  for (int s = 0; s < g.n(); ++s) {
    std::function<void(int, int)> dfs = [&](int v, int via) {
      if (++steps > max_steps) throw TooLarge("cycle enumeration exceeded its step budget");
      for (auto [w, k] : g.adj[v]) {
        if (bridge[k] || k == via) continue;
        if (w == s && path.size() >= 3) {
          // Each cycle is found in both directions; keep one.
          if (path[1] < path.back()) {
            std::vector<VertexId> cyc;
            for (int x : path) cyc.push_back(g.ids[x]);
            out.push_back(std::move(cyc));
            if (out.size() > max_cycles) throw TooLarge("more than " + std::to_string(max_cycles) + " cycles");
          }
          continue;
        }
        if (w <= s || on_path[w]) continue;
        on_path[w] = true;
        path.push_back(w);
        dfs(w, k);
        path.pop_back();
        on_path[w] = false;
      }
    };
    path = {s};
    on_path[s] = true;
    dfs(s, -1);
    on_path[s] = false;
  }
  return out;
}

namespace {

int run_length(const std::set<VertexId>& cut_incident, const std::vector<VertexId>& cycle) {
  const int L = static_cast<int>(cycle.size());
  int run = 0, best = 0;
  bool all = true;
  for (int i = 0; i < 2 * L; ++i) {
    if (cut_incident.contains(cycle[i % L])) {
      best = std::max(best, ++run);
    } else {
      run = 0;
      all = false;
    }
  }
  return all ? L : std::min(best, L);
}

}  // namespace

int longest_cut_incident_run(const UndirectedNet& net, const std::vector<VertexId>& cycle) {
  return run_length(decompose(net).cut_incident, cycle);
}

bool is_q_cuttable_bruteforce(const UndirectedNet& net, int q, std::size_t max_cycles) {
  check_q(q);
  auto d = decompose(net);
  for (const auto& cyc : enumerate_cycles(net, max_cycles))
    if (run_length(d.cut_incident, cyc) < q) return false;
  return true;
}

std::optional<int> max_cuttability(const UndirectedNet& net) {
  if (reticulation_number(net) <= 0) return std::nullopt;
  int best = 0;
  int longest = 0;
  for (const Chain& c : maximal_chains(net)) longest = std::max(longest, static_cast<int>(c.length()));
  for (int q = 1; q <= longest; ++q) {
    if (!is_q_cuttable(net, q).is_cuttable) break;
    best = q;
  }
  return best;
}

}  // namespace tcnet
