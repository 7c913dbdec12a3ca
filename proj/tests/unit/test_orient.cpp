#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tcnet/cuttable.hpp"
#include "tcnet/error.hpp"
#include "tcnet/genesis.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/orient.hpp"
#include "tcnet/phyloio.hpp"
#include "tcnet/structure.hpp"
#include "tcnet/validate.hpp"

using namespace tcnet;

namespace {

VertexId V(std::uint32_t v) { return VertexId(v); }

OrientationSpec square_spec() {
  OrientationSpec spec;
  spec.root_edge = Edge(V(1), V(5));
  auto put = [&](std::uint32_t t, std::uint32_t h) { spec.direction[Edge(V(t), V(h))] = Arc{V(t), V(h)}; };
  put(5, 6);
  put(5, 8);
  put(6, 7);
  put(8, 7);
  put(6, 2);
  put(7, 3);
  put(8, 4);
  return spec;
}

void check_orientation_of(const UndirectedNet& net, const RootedNet& rooted) {
  CHECK(validate_rooted(rooted).ok());
  CHECK(is_tree_child(rooted));
  CHECK(oracle::tree_child(rooted));
  CHECK(labeled_isomorphic(underlying_unrooted(rooted), net));
  CHECK(static_cast<int>(rooted.reticulation_count()) == reticulation_number(net));
}

}  // namespace

TEST_SUITE("orient") {

TEST_CASE("applying an orientation") {
  auto sq = fixtures::unrooted("square.upn");
  auto rooted = apply_orientation(sq, square_spec());
  CHECK(validate_rooted(rooted).ok());
  CHECK(rooted.root() == sq.next_id());
  CHECK(rooted.is_reticulation(V(7)));
  CHECK(is_tree_child(rooted));
  CHECK(serialize_upn(underlying_unrooted(rooted)) == serialize_upn(sq));

  auto back = spec_of(rooted);
  CHECK(back.root_edge == Edge(V(1), V(5)));
  CHECK(apply_orientation(sq, back) == rooted);
}

TEST_CASE("orientation errors") {
  auto sq = fixtures::unrooted("square.upn");
  auto spec = square_spec();
  spec.direction[Edge(V(2), V(6))] = Arc{V(2), V(6)};
  CHECK_THROWS_AS(apply_orientation(sq, spec), DegreeViolation);

  spec = square_spec();
  spec.direction[Edge(V(5), V(8))] = Arc{V(8), V(5)};
  spec.direction[Edge(V(8), V(7))] = Arc{V(7), V(8)};
  spec.direction[Edge(V(6), V(7))] = Arc{V(6), V(7)};
  CHECK_THROWS_AS(apply_orientation(sq, spec), Error);

  spec = square_spec();
  spec.direction.erase(Edge(V(7), V(3)));
  CHECK_THROWS_AS(apply_orientation(sq, spec), InvalidOrientationSpec);
}

TEST_CASE("tree-child recognition") {
  CHECK(is_tree_child(fixtures::rooted("tc_simple.enw")));
  CHECK_FALSE(is_tree_child(fixtures::rooted("stack.enw")));
  CHECK_FALSE(is_tree_child(fixtures::rooted("sibling_reticulations.enw")));
}

TEST_CASE("chain edges and the spanning-tree complement") {
  auto sq = fixtures::unrooted("square.upn");
  CHECK(chain_edge_set(sq).size() == 4);
  auto sp = choose_s_prime(sq, chain_edge_set(sq));
  CHECK(sp.size() == 1);
  CHECK(oracle::connected_without(sq, sp));

  auto theta = fixtures::unrooted("theta.upn");
  CHECK(chain_edge_set(theta) == std::set<Edge>{Edge(V(9), V(10))});
  CHECK_THROWS_AS(choose_s_prime(theta, chain_edge_set(theta)), NotTwoCuttable);
}

TEST_CASE("constructive orientation on fixtures") {
  for (const char* name : {"square.upn", "level2_blob_net.upn", "two_chains_net.upn", "gen_q2_s7.upn", "gen_q3_s1.upn",
                           "triangle_leaf.upn", "cherry3.upn", "pair.upn"}) {
    INFO(name);
    auto net = fixtures::unrooted(name);
    check_orientation_of(net, tree_child_orient_2cuttable(net));
  }
  CHECK_THROWS_AS(tree_child_orient_2cuttable(fixtures::unrooted("non_orientable.upn")), NotTwoCuttable);
}

TEST_CASE("networks without a tree-child orientation") {
  CHECK_FALSE(brute_force_tree_child_orientation(fixtures::unrooted("non_orientable.upn")).has_value());
  auto theta = brute_force_tree_child_orientation(fixtures::unrooted("theta.upn"));
  REQUIRE(theta.has_value());
  check_orientation_of(fixtures::unrooted("theta.upn"), *theta);
  CHECK_THROWS_AS(brute_force_tree_child_orientation(fixtures::unrooted("level2_blob_net.upn"), 3), TooLarge);
}

TEST_CASE("constructive and exhaustive orientation on random 2-cuttable networks") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenConfig cfg{seed, 3 + static_cast<int>(seed % 4), static_cast<int>(seed % 4), 2, 0};
    auto net = random_q_cuttable(cfg);
    CAPTURE(seed);
    check_orientation_of(net, tree_child_orient_2cuttable(net));
    if (net.edge_count() <= 22) {
      auto brute = brute_force_tree_child_orientation(net);
      REQUIRE(brute.has_value());
      check_orientation_of(net, *brute);
    }
  }
}

TEST_CASE("exhaustive search agrees with plain enumeration on tiny networks") {
  CHECK_FALSE(oracle::has_tree_child_orientation(fixtures::unrooted("non_orientable.upn")));
  std::mt19937_64 rng(3);
  int with = 0, without = 0;
  for (int i = 0; i < 60; ++i) {
    auto net = oracle::random_network(2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2), rng);
    if (net.edge_count() > 13) continue;
    auto found = brute_force_tree_child_orientation(net);
    CHECK(found.has_value() == oracle::has_tree_child_orientation(net));
    if (found) {
      check_orientation_of(net, *found);
      ++with;
    } else {
      ++without;
    }
    if (is_q_cuttable(net, 2).is_cuttable) CHECK(found.has_value());
  }
  CHECK(with > 0);
  CHECK(without > 0);
}

}  // TEST_SUITE
