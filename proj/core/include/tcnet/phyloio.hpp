#pragma once

#include <string>
#include <string_view>

#include "tcnet/cnf.hpp"
#include "tcnet/rooted_net.hpp"
#include "tcnet/undirected_net.hpp"

namespace tcnet {

/// UPN/1: line-oriented edge list for unrooted networks.
///
///   UPN/1
///   V <id>            declare a vertex (positive integer id)
///   L <id> <label>    label a vertex, label matches [A-Za-z0-9_.-]+
///   E <id> <id>       undirected edge
///
/// '#' starts a comment that runs to the end of the line. Records may appear
/// in any order after the header. Throws SyntaxError for malformed text and
/// ValidationError for a well-formed file describing an invalid network.
UndirectedNet parse_upn(std::string_view text);
/// Canonical text: V lines by id, L lines by id, E lines by (min, max).
std::string serialize_upn(const UndirectedNet& net);

/// Extended Newick with "#H<k>" hybrid tags. Branch lengths are skipped.
/// Throws SyntaxError, DegreeError, CycleError.
RootedNet parse_enewick(std::string_view text);
/// Children are ordered by smallest descendant label, then by leaf count.
/// Hybrids are written in full at their first occurrence.
std::string serialize_enewick(const RootedNet& net);

/// Newick for unrooted binary trees. A degree-2 top node is suppressed.
/// Throws SyntaxError, NotBinary.
UndirectedNet parse_newick_tree(std::string_view text);
/// Writes the tree rooted at the neighbor of its smallest leaf. Throws
/// NotATree if the network has a cycle.
std::string serialize_newick_tree(const UndirectedNet& tree);

/// DIMACS CNF restricted to 3-literal clauses. Throws SyntaxError,
/// ClauseArityError.
CnfInstance parse_dimacs_cnf(std::string_view text);
std::string serialize_dimacs_cnf(const CnfInstance& cnf);

/// UPN/1 if the first significant line is the UPN header, Newick otherwise.
UndirectedNet parse_unrooted(std::string_view text);

}  // namespace tcnet
