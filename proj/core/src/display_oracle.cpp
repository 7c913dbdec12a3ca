#include <algorithm>
#include <functional>
#include <stdexcept>

#include "dense.hpp"
#include "tcnet/containment.hpp"
#include "tcnet/error.hpp"

namespace tcnet {

std::optional<Embedding> display_oracle(const UndirectedNet& tree, const UndirectedNet& net, std::size_t max_steps) {
  if (tree.leaf_labels() != net.leaf_labels()) throw LabelSetMismatch("tree and network have different leaf sets");
  if (tree.empty()) return Embedding{};
  detail::Dense g(net);

  // Tree vertices in preorder from the leaf with the smallest label.
  VertexId root = *tree.find_leaf(tree.leaf_labels().front());
  std::vector<std::pair<VertexId, VertexId>> order;  // (vertex, parent)
  {
    std::vector<std::pair<VertexId, VertexId>> stack{{root, root}};
    while (!stack.empty()) {
      auto [t, p] = stack.back();
      stack.pop_back();
      if (t != root) order.emplace_back(t, p);
      auto nb = tree.neighbors(t);
      std::vector<VertexId> kids;
      for (VertexId c : nb)
        if (c != p || t == root) kids.push_back(c);
      std::sort(kids.rbegin(), kids.rend());
      for (VertexId c : kids)
        if (c != t) stack.emplace_back(c, t);
    }
  }

  std::map<VertexId, int> image;
  image[root] = g.index.at(*net.find_leaf(*tree.label(root)));
  std::vector<bool> is_image(g.n(), false), used_edge(g.m(), false), on_path(g.n(), false);
  is_image[image[root]] = true;
  std::vector<std::vector<int>> paths(order.size());
  std::size_t steps = 0;

  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    auto [t, pt] = order[i];
    int src = image.at(pt);
    int target = -1;
    if (tree.is_leaf(t)) target = g.index.at(*net.find_leaf(*tree.label(t)));
    std::vector<int>& path = paths[i];
    path.assign(1, src);
    on_path[src] = true;

    std::function<bool(int)> walk = [&](int c) -> bool {
      for (auto [w, k] : g.adj[c]) {
        if (used_edge[k] || on_path[w]) continue;
        if (++steps > max_steps)
          throw BudgetExceeded("display search exceeded " + std::to_string(max_steps) + " steps");
        used_edge[k] = true;
        on_path[w] = true;
        path.push_back(w);
        bool found = false;
        if (target >= 0) {
          if (w == target) {
            image[t] = w;
            is_image[w] = true;
            found = place(i + 1);
            if (!found) is_image[w] = false;
          } else if (!g.leaf[w] && !is_image[w]) {
            found = walk(w);
          }
        } else if (!g.leaf[w] && !is_image[w]) {
          int free_edges = 0;
          for (auto [x, k2] : g.adj[w])
            if (!used_edge[k2]) ++free_edges;
          if (free_edges >= 2) {
            image[t] = w;
            is_image[w] = true;
            found = place(i + 1);
            if (!found) is_image[w] = false;
            if (!found) found = walk(w);
          }
        }
        if (found) return true;
        path.pop_back();
        on_path[w] = false;
        used_edge[k] = false;
      }
      return false;
    };
    bool ok = walk(src);
    on_path[src] = false;
    return ok;
  };

  if (!place(0)) return std::nullopt;

  Embedding emb;
  for (const auto& [t, idx] : image) emb.vertex_map[t] = g.ids[idx];
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto [t, pt] = order[i];
    Path p;
    for (int v : paths[i]) p.push_back(g.ids[v]);
    Edge e(t, pt);
    if (p.front() != emb.vertex_map.at(e.a)) std::reverse(p.begin(), p.end());
    emb.edge_map[e] = std::move(p);
  }
  if (!verify_embedding(tree, net, emb)) throw std::logic_error("display search produced an invalid embedding");
  return emb;
}

}  // namespace tcnet
