#include "tcnet/satgadget.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tcnet/error.hpp"
#include "tcnet/orient.hpp"

namespace tcnet {

namespace {

using Wiring = std::vector<std::pair<const char*, const char*>>;

const Wiring kConnectionEdges = {{"s", "u"},  {"u", "v"},  {"u", "w"}, {"w", "w'"},
                                 {"w'", "v"}, {"v", "t"},  {"w", "l"}, {"w'", "l'"}};
const Wiring kReticulationEdges = {{"s", "u"}, {"u", "v"},  {"u", "v'"}, {"v", "v'"},
                                   {"v", "w"}, {"v'", "w'"}, {"w", "l"},  {"w'", "l'"},
                                   {"w", "r"}, {"w'", "r"},  {"r", "t"}};

const std::vector<const char*> kConnectionNames = {"s", "t", "u", "v", "w", "w'", "l", "l'"};
const std::vector<const char*> kReticulationNames = {"s", "t", "u", "v", "v'", "w", "w'", "r", "l", "l'"};

// Arc lists of the two admissible connection-gadget orientations and the
// forced reticulation-gadget orientation (leaf arcs included).
const Wiring kConnectionLeft = {{"s", "u"}, {"u", "v"},  {"u", "w"}, {"v", "w'"},
                                {"w'", "w"}, {"v", "t"}, {"w", "l"}, {"w'", "l'"}};
const Wiring kConnectionRight = {{"t", "v"}, {"v", "u"}, {"v", "w'"}, {"u", "w"},
                                 {"w", "w'"}, {"u", "s"}, {"w", "l"}, {"w'", "l'"}};
const Wiring kReticulationLeft = {{"s", "u"}, {"u", "v"},  {"u", "v'"}, {"v", "v'"},
                                  {"v", "w"}, {"v'", "w'"}, {"w", "r"},  {"w'", "r"},
                                  {"r", "t"}, {"w", "l"},   {"w'", "l'"}};

std::string sup(const std::string& base, int a, int b) {
  return base + "_" + std::to_string(a) + "^" + std::to_string(b);
}

GadgetCopy place(UndirectedNet& net, GadgetKind kind, const std::string& role, std::optional<VertexId> s,
                 std::optional<VertexId> t, const std::string& label_prefix) {
  GadgetCopy g;
  g.kind = kind;
  g.role = role;
  const auto& names = kind == GadgetKind::Connection ? kConnectionNames : kReticulationNames;
  for (const char* name : names) {
    std::string nm = name;
    if (nm == "s" && s) {
      g.vertex[nm] = *s;
    } else if (nm == "t" && t) {
      g.vertex[nm] = *t;
    } else if (nm == "l") {
      g.vertex[nm] = net.add_leaf(label_prefix + ".l");
    } else if (nm == "l'") {
      g.vertex[nm] = net.add_leaf(label_prefix + ".lp");
    } else {
      g.vertex[nm] = net.add_vertex();
    }
  }
  const auto& wiring = kind == GadgetKind::Connection ? kConnectionEdges : kReticulationEdges;
  for (auto [a, b] : wiring) net.add_edge(g.vertex.at(a), g.vertex.at(b));
  return g;
}

GadgetFragment fragment(GadgetKind kind) {
  GadgetFragment f;
  GadgetCopy g = place(f.net, kind, "", std::nullopt, std::nullopt, "");
  f.net.set_label(g.vertex.at("l"), "l");
  f.net.set_label(g.vertex.at("l'"), "lp");
  f.vertex = g.vertex;
  return f;
}

}  // namespace

std::string to_string(GadgetKind k) { return k == GadgetKind::Connection ? "connection" : "reticulation"; }

GadgetFragment connection_gadget() { return fragment(GadgetKind::Connection); }
GadgetFragment reticulation_gadget() { return fragment(GadgetKind::Reticulation); }

VertexId GadgetCopy::at(const std::string& name) const {
  auto it = vertex.find(name);
  if (it == vertex.end()) throw InconsistentGadgetState("gadget " + role + " has no vertex " + name);
  return it->second;
}

const GadgetCopy& GadgetMap::gadget(const std::string& role) const {
  for (const auto& g : gadgets)
    if (g.role == role) return g;
  throw InconsistentGadgetState("no gadget with role " + role);
}

VertexId GadgetMap::vertex(const std::string& name) const {
  auto it = shared.find(name);
  if (it == shared.end()) throw InconsistentGadgetState("no shared vertex " + name);
  return it->second;
}

std::size_t GadgetMap::count(GadgetKind k) const {
  return static_cast<std::size_t>(
      std::count_if(gadgets.begin(), gadgets.end(), [k](const GadgetCopy& g) { return g.kind == k; }));
}

ValidationReport validate_2balanced(const CnfInstance& cnf) {
  ValidationReport rep;
  if (3 * cnf.m() != 4 * cnf.n())
    rep.violations.push_back({ViolationKind::ClauseCount, {},
                              std::to_string(cnf.m()) + " clauses over " + std::to_string(cnf.n()) +
                                  " variables, need 3m = 4n"});
  for (int v = 1; v <= cnf.n(); ++v) {
    std::size_t p = cnf.positive(v).size(), q = cnf.negative(v).size();
    if (p != 2 || q != 2)
      rep.violations.push_back({ViolationKind::OccurrenceCount, {},
                                "x" + std::to_string(v) + " occurs " + std::to_string(p) + " times unnegated and " +
                                    std::to_string(q) + " times negated"});
  }
  return rep;
}

std::string serialize_gmap(const GadgetMap& gmap) {
  std::ostringstream out;
  out << "GMAP/1\nsize " << gmap.n << ' ' << gmap.m << '\n';
  for (const auto& g : gmap.gadgets) {
    out << "gadget " << g.role << ' ' << to_string(g.kind);
    for (const auto& [name, id] : g.vertex) out << ' ' << name << '=' << id.value;
    out << '\n';
  }
  for (const auto& [name, id] : gmap.shared) out << "vertex " << name << ' ' << id.value << '\n';
  return out.str();
}

GadgetMap parse_gmap(std::string_view text) {
  GadgetMap gmap;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;
  auto parse_id = [&](const std::string& s, int col) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(s, &used);
      if (used != s.size() || v == 0 || v > UINT32_MAX) throw std::invalid_argument(s);
      return VertexId(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw SyntaxError(lineno, col, "bad vertex id '" + s + "'");
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 1 || tok[0] != "GMAP/1") throw SyntaxError(lineno, 1, "expected GMAP/1 header");
      header = true;
      continue;
    }
    if (tok[0] == "size") {
      if (tok.size() != 3) throw SyntaxError(lineno, 1, "size takes two numbers");
      try {
        gmap.n = std::stoi(tok[1]);
        gmap.m = std::stoi(tok[2]);
      } catch (const std::exception&) {
        throw SyntaxError(lineno, 6, "bad size");
      }
    } else if (tok[0] == "gadget") {
      if (tok.size() < 3) throw SyntaxError(lineno, 1, "gadget needs a role and a kind");
      GadgetCopy g;
      g.role = tok[1];
      if (tok[2] == "connection")
        g.kind = GadgetKind::Connection;
      else if (tok[2] == "reticulation")
        g.kind = GadgetKind::Reticulation;
      else
        throw SyntaxError(lineno, 1, "unknown gadget kind '" + tok[2] + "'");
      for (std::size_t i = 3; i < tok.size(); ++i) {
        auto eq = tok[i].find('=');
        if (eq == std::string::npos || eq == 0) throw SyntaxError(lineno, 1, "expected name=id, got '" + tok[i] + "'");
        g.vertex[tok[i].substr(0, eq)] = parse_id(tok[i].substr(eq + 1), 1);
      }
      gmap.gadgets.push_back(std::move(g));
    } else if (tok[0] == "vertex") {
      if (tok.size() != 3) throw SyntaxError(lineno, 1, "vertex takes a name and an id");
      gmap.shared[tok[1]] = parse_id(tok[2], 1);
    } else {
      throw SyntaxError(lineno, 1, "unknown record '" + tok[0] + "'");
    }
  }
  if (!header) throw SyntaxError(lineno + 1, 1, "missing GMAP/1 header");
  return gmap;
}

std::pair<UndirectedNet, GadgetMap> build_u_phi(const CnfInstance& cnf) {
  if (auto rep = validate_2balanced(cnf); !rep.ok()) throw NotTwoBalanced(rep.summary());
  const int n = cnf.n(), m = cnf.m();
  const int n_r = 1 + 2 * n;
  UndirectedNet net;
  GadgetMap gmap;
  gmap.n = n;
  gmap.m = m;

  // Root gadget.
  std::vector<VertexId> p(n_r - 2);
  for (int k = 0; k < n_r - 2; ++k) {
    p[k] = net.add_vertex();
    gmap.shared["p_" + std::to_string(k + 1)] = p[k];
    if (k > 0) net.add_edge(p[k - 1], p[k]);
  }
  GadgetCopy rr = place(net, GadgetKind::Reticulation, "R_r", std::nullopt, p[0], "Rr");
  VertexId ell_r = net.add_leaf("ell_r"), ell_rp = net.add_leaf("ell_rp");
  net.add_edge(rr.at("s"), ell_r);
  net.add_edge(rr.at("s"), ell_rp);
  gmap.shared["ell_r"] = ell_r;
  gmap.shared["ell_r'"] = ell_rp;
  gmap.gadgets.push_back(rr);
  for (int k = 1; k <= n_r - 1; ++k) {
    VertexId s = p[std::min(k, n_r - 2) - 1];
    GadgetCopy g = place(net, GadgetKind::Reticulation, "R^" + std::to_string(k), s, std::nullopt,
                         "R" + std::to_string(k));
    int i = (k + 1) / 2, h = k % 2 == 1 ? 1 : 2;
    gmap.shared[sup("r", i, h)] = g.at("t");
    gmap.gadgets.push_back(std::move(g));
  }

  // Clause gadgets.
  for (int j = 1; j <= m; ++j) {
    VertexId z = net.add_vertex();
    gmap.shared["z_" + std::to_string(j)] = z;
    for (int k = 1; k <= 3; ++k) {
      VertexId l = net.add_vertex();
      std::string tag = std::to_string(j) + "." + std::to_string(k);
      GadgetCopy g = place(net, GadgetKind::Connection, sup("C", j, k), z, std::nullopt, "C" + tag);
      VertexId t = g.at("t");
      VertexId leaf = net.add_leaf("ell_" + tag);
      net.add_edge(l, t);
      net.add_edge(t, leaf);
      gmap.shared[sup("l", j, k)] = l;
      gmap.shared[sup("t", j, k)] = t;
      gmap.shared[sup("ell", j, k)] = leaf;
      gmap.gadgets.push_back(std::move(g));
    }
  }

  // Variable gadgets, wired to the clause literals and the root gadget.
  for (int i = 1; i <= n; ++i) {
    VertexId r1 = gmap.vertex(sup("r", i, 1)), r2 = gmap.vertex(sup("r", i, 2));
    GadgetCopy g[2];
    for (int h = 1; h <= 2; ++h) {
      const Occurrence& pos = cnf.positive(i)[h - 1];
      const Occurrence& neg = cnf.negative(i)[h - 1];
      VertexId s = gmap.vertex(sup("l", pos.clause + 1, pos.position + 1));
      VertexId t = gmap.vertex(sup("l", neg.clause + 1, neg.position + 1));
      g[h - 1] = place(net, GadgetKind::Connection, sup("G", i, h), s, t,
                       "G" + std::to_string(i) + "." + std::to_string(h));
    }
    net.add_edge(g[0].at("s"), r2);
    net.add_edge(r2, g[1].at("t"));
    net.add_edge(g[0].at("t"), r1);
    net.add_edge(r1, g[1].at("s"));
    gmap.gadgets.push_back(std::move(g[0]));
    gmap.gadgets.push_back(std::move(g[1]));
  }

  auto rep = validate_unrooted(net);
  if (!rep.ok()) throw std::logic_error("reduction produced an invalid network: " + rep.summary());
  return {std::move(net), std::move(gmap)};
}

RootedNet build_n_phi(const CnfInstance& cnf, const Assignment& assignment) {
  auto [net, gmap] = build_u_phi(cnf);
  if (static_cast<int>(assignment.values.size()) != cnf.n())
    throw UnsatisfiedAssignment("assignment has " + std::to_string(assignment.values.size()) +
                                " values for " + std::to_string(cnf.n()) + " variables");
  if (!satisfies(cnf, assignment)) throw UnsatisfiedAssignment("assignment " + assignment.to_string() + " leaves a clause false");

  OrientationSpec spec;
  auto direct = [&](VertexId a, VertexId b) { spec.direction[Edge(a, b)] = Arc{a, b}; };
  auto apply = [&](const GadgetCopy& g, const Wiring& arcs) {
    for (auto [a, b] : arcs) direct(g.at(a), g.at(b));
  };

  // Root above ell_r; ell_r' hangs off the same vertex.
  const GadgetCopy& rr = gmap.gadget("R_r");
  spec.root_edge = Edge(rr.at("s"), gmap.vertex("ell_r"));
  direct(rr.at("s"), gmap.vertex("ell_r'"));

  const int n = cnf.n(), m = cnf.m(), n_r = 1 + 2 * n;
  for (const auto& g : gmap.gadgets)
    if (g.kind == GadgetKind::Reticulation) apply(g, kReticulationLeft);
  for (int k = 1; k + 1 <= n_r - 2; ++k)
    direct(gmap.vertex("p_" + std::to_string(k)), gmap.vertex("p_" + std::to_string(k + 1)));
  for (int i = 1; i <= n; ++i) {
    const GadgetCopy& g1 = gmap.gadget(sup("G", i, 1));
    const GadgetCopy& g2 = gmap.gadget(sup("G", i, 2));
    VertexId r1 = gmap.vertex(sup("r", i, 1)), r2 = gmap.vertex(sup("r", i, 2));
    direct(r2, g1.at("s"));
    direct(r2, g2.at("t"));
    direct(r1, g1.at("t"));
    direct(r1, g2.at("s"));
    const Wiring& pattern = assignment.value(i) ? kConnectionLeft : kConnectionRight;
    apply(g1, pattern);
    apply(g2, pattern);
  }
  for (int j = 1; j <= m; ++j) {
    const Clause& c = cnf.clause(j - 1);
    bool all_true = std::all_of(c.begin(), c.end(), [&](const Literal& l) { return assignment.eval(l); });
    for (int k = 1; k <= 3; ++k) {
      VertexId t = gmap.vertex(sup("t", j, k));
      direct(gmap.vertex(sup("l", j, k)), t);
      direct(t, gmap.vertex(sup("ell", j, k)));
      bool left = all_true ? k != 3 : assignment.eval(c[k - 1]);
      apply(gmap.gadget(sup("C", j, k)), left ? kConnectionLeft : kConnectionRight);
    }
  }

  RootedNet out = apply_orientation(net, spec);
  if (!validate_rooted(out).ok() || !is_tree_child(out))
    throw std::logic_error("orientation built from a satisfying assignment is not tree-child");
  return out;
}

Assignment extract_assignment(const RootedNet& net, const GadgetMap& gmap) {
  if (!validate_rooted(net).ok()) throw NotTreeChild("input is not a valid rooted network");
  if (!is_tree_child(net)) throw NotTreeChild("input is not tree-child");
  Assignment a;
  a.values.resize(gmap.n);
  auto ret = [&](VertexId v) {
    if (!net.has_vertex(v)) throw InconsistentGadgetState("vertex " + to_string(v) + " is not in the network");
    return net.in_degree(v) == 2;
  };
  for (int i = 1; i <= gmap.n; ++i) {
    const GadgetCopy& g1 = gmap.gadget(sup("G", i, 1));
    const GadgetCopy& g2 = gmap.gadget(sup("G", i, 2));
    bool v1 = ret(g1.at("t")), v2 = ret(g2.at("t"));
    bool u1 = ret(g1.at("s")), u2 = ret(g2.at("s"));
    if (v1 && v2 && !u1 && !u2)
      a.values[i - 1] = true;
    else if (u1 && u2 && !v1 && !v2)
      a.values[i - 1] = false;
    else
      throw InconsistentGadgetState("variable gadget " + std::to_string(i) +
                                    " has neither both s-terminals nor both t-terminals as reticulations");
  }
  return a;
}

std::optional<Assignment> sat_bruteforce(const CnfInstance& cnf, int max_vars) {
  const int n = cnf.n();
  if (n > max_vars) throw TooLarge(std::to_string(n) + " variables exceed the limit of " + std::to_string(max_vars));
  Assignment a;
  a.values.assign(n, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int v = 0; v < n; ++v) a.values[v] = (mask >> (n - 1 - v)) & 1;
    if (satisfies(cnf, a)) return a;
  }
  return std::nullopt;
}

}  // namespace tcnet
