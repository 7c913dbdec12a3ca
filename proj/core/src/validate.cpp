#include "tcnet/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tcnet {

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Empty: return "empty";
    case ViolationKind::Disconnected: return "disconnected";
    case ViolationKind::BadDegree: return "bad-degree";
    case ViolationKind::UnlabeledLeaf: return "unlabeled-leaf";
    case ViolationKind::LabeledInternal: return "labeled-internal";
    case ViolationKind::DuplicateLabel: return "duplicate-label";
    case ViolationKind::ParallelEdge: return "parallel-edge";
    case ViolationKind::SelfLoop: return "self-loop";
    case ViolationKind::Cycle: return "cycle";
    case ViolationKind::MissingRoot: return "missing-root";
    case ViolationKind::Unreachable: return "unreachable";
    case ViolationKind::ClauseCount: return "clause-count";
    case ViolationKind::OccurrenceCount: return "occurrence-count";
  }
  return "unknown";
}

std::size_t ValidationReport::count(ViolationKind k) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; }));
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << to_string(violations[i].kind) << ": " << violations[i].message;
  }
  return os.str();
}

namespace {

void add(ValidationReport& r, ViolationKind k, std::vector<VertexId> vs, std::string msg) {
  r.violations.push_back(Violation{k, std::move(vs), std::move(msg)});
}

void check_labels(ValidationReport& r, const std::vector<std::pair<VertexId, std::string>>& labeled) {
  std::map<std::string, std::vector<VertexId>> seen;
  for (const auto& [v, l] : labeled) seen[l].push_back(v);
  for (auto& [l, vs] : seen)
    if (vs.size() > 1) add(r, ViolationKind::DuplicateLabel, vs, "label '" + l + "' used " + std::to_string(vs.size()) + " times");
}

}  // namespace

ValidationReport validate_unrooted(const UndirectedNet& net) {
  ValidationReport r;
  if (net.empty()) {
    add(r, ViolationKind::Empty, {}, "network has no vertices");
    return r;
  }
  if (net.vertex_count() == 1) {
    VertexId v = net.vertices().front();
    if (net.degree(v) != 0) add(r, ViolationKind::SelfLoop, {v}, "self-loop at " + to_string(v));
    if (!net.is_leaf(v)) add(r, ViolationKind::UnlabeledLeaf, {v}, "single vertex " + to_string(v) + " has no label");
    return r;
  }

  for (VertexId v : net.vertices()) {
    auto nb = net.neighbors(v);
    std::size_t d = nb.size();
    if (std::count(nb.begin(), nb.end(), v) > 0)
      add(r, ViolationKind::SelfLoop, {v}, "self-loop at " + to_string(v));
    std::set<VertexId> seen;
    for (VertexId w : nb) {
      if (w == v) continue;
      if (!seen.insert(w).second && v < w)
        add(r, ViolationKind::ParallelEdge, {v, w}, "parallel edges " + to_string(v) + "-" + to_string(w));
    }
    bool labeled = net.is_leaf(v);
    if (d != 1 && d != 3)
      add(r, ViolationKind::BadDegree, {v}, "vertex " + to_string(v) + " has degree " + std::to_string(d));
    if (d == 1 && !labeled)
      add(r, ViolationKind::UnlabeledLeaf, {v}, "leaf " + to_string(v) + " has no label");
    if (d != 1 && labeled)
      add(r, ViolationKind::LabeledInternal, {v}, "labeled vertex " + to_string(v) + " has degree " + std::to_string(d));
  }
  check_labels(r, net.labeled_vertices());

  std::set<VertexId> reached;
  std::vector<VertexId> stack{net.vertices().front()};
  reached.insert(stack.back());
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : net.neighbors(v))
      if (reached.insert(w).second) stack.push_back(w);
  }
  if (reached.size() != net.vertex_count()) {
    std::vector<VertexId> missing;
    for (VertexId v : net.vertices())
      if (!reached.contains(v)) missing.push_back(v);
    add(r, ViolationKind::Disconnected, missing,
        std::to_string(missing.size()) + " vertices unreachable from " + to_string(net.vertices().front()));
  }
  return r;
}

ValidationReport validate_rooted(const RootedNet& net) {
  ValidationReport r;
  if (net.vertex_count() == 0) {
    add(r, ViolationKind::Empty, {}, "network has no vertices");
    return r;
  }
  auto root = net.root();
  if (!root) {
    add(r, ViolationKind::MissingRoot, {}, "no root designated");
  }
  std::vector<std::pair<VertexId, std::string>> labeled;
  for (VertexId v : net.vertices()) {
    auto ch = net.children(v);
    std::size_t in = net.in_degree(v), out = ch.size();
    if (std::count(ch.begin(), ch.end(), v) > 0)
      add(r, ViolationKind::SelfLoop, {v}, "self-loop at " + to_string(v));
    std::set<VertexId> seen;
    for (VertexId c : ch)
      if (!seen.insert(c).second)
        add(r, ViolationKind::ParallelEdge, {v, c}, "parallel arcs " + to_string(v) + "->" + to_string(c));
    auto lab = net.label(v);
    if (lab) labeled.emplace_back(v, std::string(*lab));
    std::string deg = "(" + std::to_string(in) + "," + std::to_string(out) + ")";
    if (root && v == *root) {
      if (in != 0 || out != 2)
        add(r, ViolationKind::BadDegree, {v}, "root " + to_string(v) + " has degree " + deg);
      if (lab) add(r, ViolationKind::LabeledInternal, {v}, "root " + to_string(v) + " is labeled");
      continue;
    }
    if (out == 0) {
      if (in != 1) add(r, ViolationKind::BadDegree, {v}, "leaf " + to_string(v) + " has degree " + deg);
      if (!lab) add(r, ViolationKind::UnlabeledLeaf, {v}, "leaf " + to_string(v) + " has no label");
    } else {
      if (!((in == 1 && out == 2) || (in == 2 && out == 1)))
        add(r, ViolationKind::BadDegree, {v}, "vertex " + to_string(v) + " has degree " + deg);
      if (lab) add(r, ViolationKind::LabeledInternal, {v}, "labeled vertex " + to_string(v) + " has children");
    }
  }
  check_labels(r, labeled);

  // Kahn's algorithm; whatever is left over lies on or behind a cycle.
  std::map<VertexId, std::size_t> indeg;
  std::vector<VertexId> ready;
  for (VertexId v : net.vertices()) {
    indeg[v] = net.in_degree(v);
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t done = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++done;
    for (VertexId c : net.children(v))
      if (--indeg[c] == 0) ready.push_back(c);
  }
  if (done != net.vertex_count()) {
    std::vector<VertexId> cyc;
    for (auto& [v, d] : indeg)
      if (d > 0) cyc.push_back(v);
    add(r, ViolationKind::Cycle, cyc, "directed cycle among " + std::to_string(cyc.size()) + " vertices");
  }

  if (root) {
    std::set<VertexId> reached{*root};
    std::vector<VertexId> stack{*root};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId c : net.children(v))
        if (reached.insert(c).second) stack.push_back(c);
    }
    if (reached.size() != net.vertex_count()) {
      std::vector<VertexId> missing;
      for (VertexId v : net.vertices())
        if (!reached.contains(v)) missing.push_back(v);
      add(r, ViolationKind::Unreachable, missing,
          std::to_string(missing.size()) + " vertices not reachable from the root");
    }
  }
  return r;
}

}  // namespace tcnet
