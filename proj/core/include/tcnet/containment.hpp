#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tcnet/ids.hpp"
#include "tcnet/structure.hpp"
#include "tcnet/undirected_net.hpp"

namespace tcnet {

using Path = std::vector<VertexId>;

/// Image of a tree T inside a network U. edge_map[{a,b}] runs from
/// vertex_map[a] to vertex_map[b] for the canonical edge a < b.
struct Embedding {
  std::map<VertexId, VertexId> vertex_map;
  std::map<Edge, Path> edge_map;
};

struct EmbeddingCheck {
  bool ok = true;
  /// 1 images are vertices, 2 leaves fixed, 3 injective, 4 edge images are
  /// paths between the right ends, 5 edge images pairwise edge-disjoint.
  int violated_property = 0;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Throws LabelSetMismatch if T and U have different leaf labels.
EmbeddingCheck verify_embedding(const UndirectedNet& tree, const UndirectedNet& net, const Embedding& emb);

/// First split of a cut-edge of U (canonical edge order) that is
/// incompatible with a split of an edge of T (canonical edge order).
std::optional<std::pair<Split, Split>> conflicting_split(const UndirectedNet& tree, const UndirectedNet& net);

struct Instance {
  UndirectedNet tree;
  UndirectedNet net;
};

struct BranchResult {
  Instance first;   // side of the lower endpoint of the cut-edge, plus leaf x1
  Instance second;  // other side, plus leaf x2
  std::string x1, x2;
  Split split;
};

/// Cuts U at the non-trivial cut-edge `e` and T at the edge with the same
/// split, hanging fresh leaves "_b<k>.1" / "_b<k>.2" on the stubs (k is
/// raised until both labels are unused). Throws NotCutEdge, TrivialCutEdge,
/// NoMatchingTreeEdge.
BranchResult branch_on_cut_edge(const UndirectedNet& tree, const UndirectedNet& net, const Edge& e, int k = 0);

/// No internal vertex touches a cut-edge that is not on the path.
bool is_entangled(const UndirectedNet& net, const Path& path);

/// Deletes every vertex on a cut-edge that avoids u and v, then returns a
/// shortest u-v path in what is left (ties toward lower ids).
std::optional<Path> entangled_path(const UndirectedNet& net, VertexId u, VertexId v);

struct PendantTriple {
  std::string x, y, z;  // {x,y} cherry, x < y
};
struct PendantQuad {
  std::string w, x, y, z;  // cherries {x,y} and {w,z}; x < y, w < z, x < w
};
using PendantStructure = std::variant<PendantTriple, PendantQuad>;

/// Every pendant triple of T in lexicographic order.
std::vector<PendantTriple> pendant_triples(const UndirectedNet& tree);
/// Lexicographically first pendant triple, else first pendant quad. Throws
/// TooFewLeaves for fewer than four leaves.
PendantStructure find_pendant_structures(const UndirectedNet& tree);

enum class Verdict { Yes, No, Reduced };

std::string to_string(Verdict v);

struct RuleOutcome {
  Verdict verdict = Verdict::Yes;
  int rule = 1;
  std::string sub_case;  // "I".."IV" where the rule has cases
  std::optional<UndirectedNet> reduced_net;
  std::optional<Edge> eliminated;
  std::string certificate;
};

/// Applies the first rule that fires: at most three leaves, three-chain,
/// pendant triple, pendant quad. On four leaves, where the three-chain rule
/// can miss, a cherry of T without an entangled path in U answers No.
/// Throws NotSimple, NotThreeCuttable.
RuleOutcome apply_reduction(const UndirectedNet& tree, const UndirectedNet& net);

enum class TraceKind { SplitConflict, Branch, Rule, Elim, Yes, No };

std::string to_string(TraceKind k);

struct TraceEvent {
  TraceKind kind;
  std::string instance;  // "0", "0.1", "0.2", "0.1.1", ...
  std::string detail;
  /// Filled when snapshots are requested: the instance tree and the network
  /// before and after an ELIM, or the two sub-instances of a BRANCH.
  std::optional<UndirectedNet> tree, before, after;
};

struct ContainmentResult {
  bool displays = false;
  std::vector<TraceEvent> trace;
};

/// Decides whether the 3-cuttable network U displays T by conflicting-split
/// checks, branching on non-trivial cut-edges and the reduction rules.
/// Throws NotThreeCuttable, LabelSetMismatch, NotATree.
ContainmentResult three_cuttable_tc(const UndirectedNet& tree, const UndirectedNet& net, bool snapshots = false);

/// TCTRACE/1 text, one event per line: "<instance> <KIND> <detail>".
std::string serialize_trace(const std::vector<TraceEvent>& trace);

/// Backtracking search for an embedding of T in U. Throws BudgetExceeded
/// after `max_steps` search steps and LabelSetMismatch.
std::optional<Embedding> display_oracle(const UndirectedNet& tree, const UndirectedNet& net,
                                        std::size_t max_steps = 5'000'000);

}  // namespace tcnet
