#include "tcnet/isomorphism.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcnet/error.hpp"

namespace tcnet {

namespace {

// Graph with typed adjacency. Type 0 = undirected, 1 = out-arc, 2 = in-arc.
struct Typed {
  std::vector<VertexId> ids;
  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<std::string> label;  // empty = unlabeled
  std::vector<bool> labeled;
  int root = -1;

  int n() const { return static_cast<int>(ids.size()); }

  int count(int v, int w, int type) const {
    int c = 0;
    for (auto [x, t] : adj[v])
      if (x == w && t == type) ++c;
    return c;
  }
};

template <class Net>
Typed index_of(const Net& net, std::unordered_map<VertexId, int>& idx) {
  Typed g;
  g.ids = net.vertices();
  for (int i = 0; i < g.n(); ++i) idx.emplace(g.ids[i], i);
  g.adj.resize(g.ids.size());
  g.label.resize(g.ids.size());
  g.labeled.resize(g.ids.size());
  for (int i = 0; i < g.n(); ++i) {
    auto l = net.label(g.ids[i]);
    if (l) {
      g.label[i] = std::string(*l);
      g.labeled[i] = true;
    }
  }
  return g;
}

Typed typed(const UndirectedNet& net) {
  std::unordered_map<VertexId, int> idx;
  Typed g = index_of(net, idx);
  for (int i = 0; i < g.n(); ++i)
    for (VertexId w : net.neighbors(g.ids[i])) g.adj[i].emplace_back(idx.at(w), 0);
  return g;
}

Typed typed(const RootedNet& net) {
  std::unordered_map<VertexId, int> idx;
  Typed g = index_of(net, idx);
  for (int i = 0; i < g.n(); ++i) {
    for (VertexId c : net.children(g.ids[i])) g.adj[i].emplace_back(idx.at(c), 1);
    for (VertexId p : net.parents(g.ids[i])) g.adj[i].emplace_back(idx.at(p), 2);
  }
  if (net.root()) g.root = idx.at(*net.root());
  return g;
}

class Matcher {
 public:
  Matcher(const Typed& a, const Typed& b) : a_(a), b_(b), fwd_(a.n(), -1), bwd_(b.n(), -1) {}

  std::optional<VertexMap> run() {
    if (a_.n() != b_.n()) return std::nullopt;
    std::unordered_map<std::string, int> b_leaf;
    for (int i = 0; i < b_.n(); ++i)
      if (b_.labeled[i] && !b_leaf.emplace(b_.label[i], i).second) return std::nullopt;
    for (int i = 0; i < a_.n(); ++i) {
      if (!a_.labeled[i]) continue;
      auto it = b_leaf.find(a_.label[i]);
      if (it == b_leaf.end() || bwd_[it->second] != -1 || !compatible(i, it->second)) return std::nullopt;
      assign(i, it->second);
    }
    for (int j = 0; j < b_.n(); ++j)
      if (b_.labeled[j] && bwd_[j] == -1) return std::nullopt;
    if ((a_.root == -1) != (b_.root == -1)) return std::nullopt;
    if (a_.root != -1) {
      if (fwd_[a_.root] != -1 && fwd_[a_.root] != b_.root) return std::nullopt;
      if (fwd_[a_.root] == -1) {
        if (bwd_[b_.root] != -1 || !compatible(a_.root, b_.root)) return std::nullopt;
        assign(a_.root, b_.root);
      }
    }
    for (int i = 0; i < a_.n(); ++i)
      if (fwd_[i] != -1 && !consistent(i, fwd_[i])) return std::nullopt;
    if (!extend()) return std::nullopt;
    VertexMap out;
    for (int i = 0; i < a_.n(); ++i) out.emplace(a_.ids[i], b_.ids[fwd_[i]]);
    return out;
  }

 private:
  bool compatible(int x, int y) const {
    if (a_.labeled[x] != b_.labeled[y]) return false;
    if (a_.labeled[x] && a_.label[x] != b_.label[y]) return false;
    if (a_.adj[x].size() != b_.adj[y].size()) return false;
    for (int t = 0; t < 3; ++t) {
      auto cnt = [t](const auto& adj) {
        return std::count_if(adj.begin(), adj.end(), [t](auto p) { return p.second == t; });
      };
      if (cnt(a_.adj[x]) != cnt(b_.adj[y])) return false;
    }
    return (x == a_.root) == (y == b_.root);
  }

  // Every already-mapped neighbor relation of x is mirrored at y.
  bool consistent(int x, int y) const {
    for (auto [w, t] : a_.adj[x]) {
      int fw = fwd_[w];
      if (fw == -1) continue;
      if (a_.count(x, w, t) != b_.count(y, fw, t)) return false;
    }
    for (auto [w, t] : b_.adj[y]) {
      int bw = bwd_[w];
      if (bw == -1) continue;
      if (b_.count(y, w, t) != a_.count(x, bw, t)) return false;
    }
    return true;
  }

  void assign(int x, int y) {
    fwd_[x] = y;
    bwd_[y] = x;
    trail_.push_back(x);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int x = trail_.back();
      trail_.pop_back();
      bwd_[fwd_[x]] = -1;
      fwd_[x] = -1;
    }
  }

  bool extend() {
    // Pick an unmapped vertex adjacent to a mapped one, preferring the one
    // with the fewest candidates.
    int best = -1;
    std::vector<int> best_cands;
    for (int x = 0; x < a_.n(); ++x) {
      if (fwd_[x] == -1) continue;
      for (auto [w, t] : a_.adj[x]) {
        if (fwd_[w] != -1) continue;
        std::vector<int> cands;
        for (auto [c, tc] : b_.adj[fwd_[x]])
          if (tc == t && bwd_[c] == -1 && std::find(cands.begin(), cands.end(), c) == cands.end())
            cands.push_back(c);
        if (best == -1 || cands.size() < best_cands.size()) {
          best = w;
          best_cands = std::move(cands);
        }
      }
    }
    if (best == -1) {
      for (int x = 0; x < a_.n(); ++x)
        if (fwd_[x] == -1) {
          best = x;
          break;
        }
      if (best == -1) return true;
      for (int c = 0; c < b_.n(); ++c)
        if (bwd_[c] == -1) best_cands.push_back(c);
    }
    for (int c : best_cands) {
      if (!compatible(best, c) || !consistent(best, c)) continue;
      std::size_t mark = trail_.size();
      assign(best, c);
      if (extend()) return true;
      undo_to(mark);
    }
    return false;
  }

  const Typed& a_;
  const Typed& b_;
  std::vector<int> fwd_, bwd_;
  std::vector<int> trail_;
};

}  // namespace

std::optional<VertexMap> find_labeled_isomorphism(const UndirectedNet& a, const UndirectedNet& b) {
  Typed ta = typed(a), tb = typed(b);
  return Matcher(ta, tb).run();
}

bool labeled_isomorphic(const UndirectedNet& a, const UndirectedNet& b) {
  if (a.leaf_labels() != b.leaf_labels()) throw LabelSetMismatch("networks have different leaf sets");
  return find_labeled_isomorphism(a, b).has_value();
}

std::optional<VertexMap> find_rooted_isomorphism(const RootedNet& a, const RootedNet& b) {
  Typed ta = typed(a), tb = typed(b);
  return Matcher(ta, tb).run();
}

bool rooted_isomorphic(const RootedNet& a, const RootedNet& b) {
  if (a.leaf_labels() != b.leaf_labels()) throw LabelSetMismatch("networks have different leaf sets");
  return find_rooted_isomorphism(a, b).has_value();
}

}  // namespace tcnet
