#include "tcnet/genesis.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "dense.hpp"
#include "tcnet/cuttable.hpp"
#include "tcnet/edit.hpp"
#include "tcnet/error.hpp"
#include "tcnet/structure.hpp"

namespace tcnet {

namespace {

UndirectedNet grow_tree(const std::vector<std::string>& labels, std::mt19937_64& rng) {
  UndirectedNet net;
  if (labels.empty()) return net;
  VertexId first = net.add_leaf(labels[0]);
  if (labels.size() == 1) return net;
  VertexId second = net.add_leaf(labels[1]);
  net.add_edge(first, second);
  for (std::size_t i = 2; i < labels.size(); ++i) {
    auto edges = net.edges();
    Edge e = edges[detail::uniform_below(rng, edges.size())];
    VertexId mid = inplace::subdivide(net, e);
    VertexId leaf = net.add_leaf(labels[i]);
    net.add_edge(mid, leaf);
  }
  return net;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace

UndirectedNet random_tree(const std::vector<std::string>& labels, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return grow_tree(labels, rng);
}

UndirectedNet random_tree(int leaf_count, std::uint64_t seed) { return random_tree(default_labels(leaf_count), seed); }

UndirectedNet make_q_cuttable(const UndirectedNet& net, int q) {
  if (q < 1) throw InvalidQ("q must be at least 1, got " + std::to_string(q));
  UndirectedNet out = net;
  int k = 0;
  for (;;) {
    auto rep = is_q_cuttable(out, q);
    if (rep.is_cuttable) return out;
    const auto& cyc = *rep.witness_cycle;
    Edge lowest(cyc[0], cyc[1]);
    for (std::size_t i = 0; i < cyc.size(); ++i) lowest = std::min(lowest, Edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    Edge cur = lowest;
    for (int i = 0; i < q; ++i) {
      VertexId mid = inplace::subdivide(out, cur);
      std::string label;
      do {
        label = "aug_" + std::to_string(k++);
      } while (out.find_leaf(label));
      VertexId leaf = out.add_leaf(label);
      out.add_edge(mid, leaf);
      cur = Edge(mid, cur.b);
    }
  }
}

UndirectedNet random_q_cuttable(const GenConfig& config) {
  if (config.leaf_count < 2) throw InvalidConfig("leaf_count must be at least 2");
  if (config.target_q < 1) throw InvalidConfig("target_q must be at least 1");
  if (config.target_r < 0) throw InvalidConfig("target_r must be non-negative");
  if (config.target_level < 0) throw InvalidConfig("target_level must be non-negative");
  std::mt19937_64 rng(config.seed);
  UndirectedNet net = grow_tree(default_labels(config.leaf_count), rng);
  auto with_handle = [](const UndirectedNet& base, const Edge& e, const Edge& f) {
    UndirectedNet trial = base;
    VertexId a = inplace::subdivide(trial, e);
    VertexId b = inplace::subdivide(trial, f);
    trial.add_edge(a, b);
    return trial;
  };
  for (int h = 0; h < config.target_r; ++h) {
    auto edges = net.edges();
    if (edges.size() < 2) throw InvalidConfig("a handle needs two edges");
    std::size_t i = detail::uniform_below(rng, edges.size());
    if (config.target_level == 0) {
      std::size_t j = detail::uniform_below(rng, edges.size() - 1);
      if (j >= i) ++j;
      net = with_handle(net, edges[i], edges[j]);
      continue;
    }
    bool placed = false;
    for (std::size_t tries = 0; tries < edges.size() && !placed; ++tries, i = (i + 1) % edges.size()) {
      std::vector<UndirectedNet> ok;
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (j == i) continue;
        UndirectedNet trial = with_handle(net, edges[i], edges[j]);
        if (level(trial) <= config.target_level) ok.push_back(std::move(trial));
      }
      if (ok.empty()) continue;
      net = std::move(ok[detail::uniform_below(rng, ok.size())]);
      placed = true;
    }
    if (!placed) throw InvalidConfig("could not place a handle within the level bound");
  }
  return make_q_cuttable(net, config.target_q);
}

UndirectedNet sample_displayed_tree(const UndirectedNet& net, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  UndirectedNet cur = net;
  while (reticulation_number(cur) > 0) {
    auto d = decompose(cur);
    std::vector<Edge> candidates;
    for (const Edge& e : cur.edges())
      if (!d.cut.contains(e) && !cur.is_leaf(e.a) && !cur.is_leaf(e.b)) candidates.push_back(e);
    detail::shuffle(candidates, rng);
    bool done = false;
    for (const Edge& e : candidates) {
      try {
        cur = eliminate_edge(cur, e);
        done = true;
        break;
      } catch (const WouldCreateParallelEdge&) {
      }
    }
    if (!done) throw WouldCreateParallelEdge("every remaining edge elimination creates a parallel edge");
  }
  return cur;
}

CnfInstance random_2balanced_cnf(int n, std::uint64_t seed) {
  if (n <= 0 || n % 3 != 0) throw InvalidN("n must be a positive multiple of 3, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<Literal> slots;
  for (int v = 1; v <= n; ++v) {
    slots.push_back({v, false});
    slots.push_back({v, false});
    slots.push_back({v, true});
    slots.push_back({v, true});
  }
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    detail::shuffle(slots, rng);
    bool ok = true;
    for (std::size_t c = 0; c < slots.size() && ok; c += 3)
      ok = slots[c].var != slots[c + 1].var && slots[c].var != slots[c + 2].var && slots[c + 1].var != slots[c + 2].var;
    if (!ok) continue;
    std::vector<Clause> clauses;
    for (std::size_t c = 0; c < slots.size(); c += 3) clauses.push_back({slots[c], slots[c + 1], slots[c + 2]});
    return CnfInstance(n, std::move(clauses));
  }
  throw std::logic_error("could not draw a 2-balanced formula");
}

}  // namespace tcnet
