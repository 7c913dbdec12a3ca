#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tcnet/ids.hpp"
#include "tcnet/undirected_net.hpp"

namespace tcnet {

struct CuttabilityReport {
  int q = 1;
  bool is_cuttable = true;
  /// Chordless cycle with no run of q cut-incident vertices. Present iff
  /// is_cuttable is false. Starts at its lowest vertex, heading toward the
  /// lower-id neighbor.
  std::optional<std::vector<VertexId>> witness_cycle;
};

/// Deletes every vertex lying in a chain of length >= q and tests whether
/// the rest is a forest.
CuttabilityReport is_q_cuttable(const UndirectedNet& net, int q);

/// Deletes one edge per maximal chain of length >= q and tests whether the
/// rest is a forest. The deleted edge is the lowest chain edge; a one-vertex
/// chain has no edge, so its lowest incident non-cut edge is deleted instead.
bool is_q_cuttable_via_chain_deletion(const UndirectedNet& net, int q);

/// Enumerates every cycle and looks for q consecutive cut-incident vertices.
/// Throws TooLarge once more than `max_cycles` cycles have been seen.
bool is_q_cuttable_bruteforce(const UndirectedNet& net, int q, std::size_t max_cycles = 100000);

/// Largest q for which the network is q-cuttable; nullopt for trees, 0 if
/// not even 1-cuttable.
std::optional<int> max_cuttability(const UndirectedNet& net);

/// All simple cycles, each once, as vertex lists starting at the lowest
/// vertex. Throws TooLarge beyond `max_cycles`.
std::vector<std::vector<VertexId>> enumerate_cycles(const UndirectedNet& net, std::size_t max_cycles = 100000);

/// Longest run of consecutive cut-incident vertices on `cycle`, read
/// cyclically.
int longest_cut_incident_run(const UndirectedNet& net, const std::vector<VertexId>& cycle);

}  // namespace tcnet
