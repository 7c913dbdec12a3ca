#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcnet/cnf.hpp"
#include "tcnet/undirected_net.hpp"

namespace tcnet {

struct GenConfig {
  std::uint64_t seed = 0;
  int leaf_count = 4;    // leaves of the starting tree, labeled x1..xn
  int target_r = 0;      // handles added to the tree
  int target_q = 1;      // cuttability enforced at the end
  int target_level = 0;  // 0: unconstrained, otherwise an upper bound on the level
};

/// Binary tree built by attaching the labels one at a time to a uniformly
/// chosen edge.
UndirectedNet random_tree(const std::vector<std::string>& labels, std::uint64_t seed);
/// Same with labels x1..xn.
UndirectedNet random_tree(int leaf_count, std::uint64_t seed);

/// While some cycle lacks a run of q cut-incident vertices, subdivides the
/// lowest edge of that cycle with q vertices, each given a new leaf
/// "aug_<k>". Throws InvalidQ for q < 1.
UndirectedNet make_q_cuttable(const UndirectedNet& net, int q);

/// Random tree, plus target_r handles between two distinct subdivided edges,
/// then make_q_cuttable. With a level bound, the second edge of each handle
/// is drawn from the choices that respect it. Throws InvalidConfig, also for
/// handles on a two-leaf tree.
UndirectedNet random_q_cuttable(const GenConfig& config);

/// Eliminates random non-cut edges until no cycle is left. Throws
/// WouldCreateParallelEdge if every remaining choice would create one.
UndirectedNet sample_displayed_tree(const UndirectedNet& net, std::uint64_t seed);

/// Random 2-balanced formula with m = 4n/3 clauses and no variable repeated
/// inside a clause. Throws InvalidN unless n is a positive multiple of 3.
CnfInstance random_2balanced_cnf(int n, std::uint64_t seed);

}  // namespace tcnet
