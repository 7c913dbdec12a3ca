#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcnet/cnf.hpp"
#include "tcnet/ids.hpp"
#include "tcnet/rooted_net.hpp"
#include "tcnet/undirected_net.hpp"
#include "tcnet/validate.hpp"

namespace tcnet {

/// Every clause has three literals, m = 4n/3, and every variable occurs
/// exactly twice unnegated and twice negated.
ValidationReport validate_2balanced(const CnfInstance& cnf);

enum class GadgetKind { Connection, Reticulation };

std::string to_string(GadgetKind k);

/// A standalone gadget. The terminals s and t have degree 1 here; the two
/// leaves are labeled "l" and "lp". Named vertices: s t u v w w' l l' for
/// the connection gadget, plus v' and r for the reticulation gadget.
struct GadgetFragment {
  UndirectedNet net;
  std::map<std::string, VertexId> vertex;
};

GadgetFragment connection_gadget();
GadgetFragment reticulation_gadget();

/// One placed gadget copy. Roles are "R_r", "R^k", "C_j^k" and "G_i^h".
struct GadgetCopy {
  GadgetKind kind = GadgetKind::Connection;
  std::string role;
  std::map<std::string, VertexId> vertex;

  VertexId at(const std::string& name) const;
  friend bool operator==(const GadgetCopy&, const GadgetCopy&) = default;
};

/// Where each gadget copy and each shared vertex of the reduction ended up.
/// Shared names: "l_j^k", "t_j^k", "z_j", "r_i^h", "p_k", "ell_r", "ell_r'".
struct GadgetMap {
  int n = 0;
  int m = 0;
  std::vector<GadgetCopy> gadgets;
  std::map<std::string, VertexId> shared;

  const GadgetCopy& gadget(const std::string& role) const;
  VertexId vertex(const std::string& name) const;
  std::size_t count(GadgetKind k) const;
  friend bool operator==(const GadgetMap&, const GadgetMap&) = default;
};

/// GMAP/1 sidecar text:
///   GMAP/1
///   size <n> <m>
///   gadget <role> <connection|reticulation> <name>=<id> ...
///   vertex <name> <id>
std::string serialize_gmap(const GadgetMap& gmap);
GadgetMap parse_gmap(std::string_view text);

/// The network U_Phi. Occurrences are paired in clause order: G_i^h takes
/// the h-th unnegated occurrence of x_i as its s-terminal and the h-th
/// negated one as its t-terminal; R^{2i-1} and R^{2i} end in r_i^1 and
/// r_i^2. Throws NotTwoBalanced.
std::pair<UndirectedNet, GadgetMap> build_u_phi(const CnfInstance& cnf);

/// Orientation of U_Phi read off a satisfying assignment. Vertex ids match
/// build_u_phi(cnf). Throws UnsatisfiedAssignment.
RootedNet build_n_phi(const CnfInstance& cnf, const Assignment& assignment);

/// x_i is true when both t-terminals of G_i^1, G_i^2 are reticulations and
/// false when both s-terminals are. Throws NotTreeChild, and
/// InconsistentGadgetState when neither holds.
Assignment extract_assignment(const RootedNet& net, const GadgetMap& gmap);

/// First satisfying assignment in lexicographic order (x_1 most significant,
/// false before true). Throws TooLarge above `max_vars` variables.
std::optional<Assignment> sat_bruteforce(const CnfInstance& cnf, int max_vars = 24);

}  // namespace tcnet
