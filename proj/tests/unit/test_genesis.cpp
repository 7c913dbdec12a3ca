#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tcnet/containment.hpp"
#include "tcnet/cuttable.hpp"
#include "tcnet/error.hpp"
#include "tcnet/genesis.hpp"
#include "tcnet/phyloio.hpp"
#include "tcnet/satgadget.hpp"
#include "tcnet/structure.hpp"
#include "tcnet/validate.hpp"

using namespace tcnet;

TEST_SUITE("genesis") {

TEST_CASE("random trees") {
  auto two = random_tree(2, 1);
  CHECK(two.edge_count() == 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = random_tree(9, seed);
    CHECK(validate_unrooted(t).ok());
    CHECK(oracle::cycle_rank(t) == 0);
    CHECK(t.leaf_count() == 9);
    CHECK(serialize_upn(t) == serialize_upn(random_tree(9, seed)));
  }
  CHECK(serialize_upn(random_tree(9, 1)) != serialize_upn(random_tree(9, 2)));
  auto named = random_tree(std::vector<std::string>{"p", "q", "r", "s"}, 3);
  CHECK(named.leaf_labels() == std::vector<std::string>{"p", "q", "r", "s"});
}

TEST_CASE("making networks q-cuttable") {
  auto tree = fixtures::unrooted("level2_blob_tree.upn");
  CHECK(make_q_cuttable(tree, 3) == tree);

  auto theta = fixtures::unrooted("theta.upn");
  auto aug = make_q_cuttable(theta, 3);
  CHECK(oracle::q_cuttable(aug, 3));
  CHECK(level(aug) == level(theta));
  CHECK(reticulation_number(aug) == reticulation_number(theta));
  CHECK((aug.leaf_count() - theta.leaf_count()) % 3 == 0);
  CHECK(aug.find_leaf("aug_0").has_value());
  CHECK_THROWS_AS(make_q_cuttable(theta, 0), InvalidQ);
}

TEST_CASE("random q-cuttable networks") {
  CHECK(reticulation_number(random_q_cuttable(GenConfig{5, 6, 0, 3, 0})) == 0);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenConfig cfg{seed, 3 + static_cast<int>(seed % 5), static_cast<int>(seed % 5), 1 + static_cast<int>(seed % 4), 0};
    auto net = random_q_cuttable(cfg);
    CAPTURE(seed);
    CHECK(validate_unrooted(net).ok());
    CHECK(reticulation_number(net) == cfg.target_r);
    CHECK(level(net) <= cfg.target_r);
    CHECK(is_q_cuttable(net, cfg.target_q).is_cuttable);
    CHECK(oracle::q_cuttable(net, cfg.target_q));
    CHECK(serialize_upn(net) == serialize_upn(random_q_cuttable(cfg)));
  }
  auto bounded = random_q_cuttable(GenConfig{9, 6, 3, 2, 1});
  CHECK(level(bounded) <= 1);
  CHECK(reticulation_number(bounded) == 3);
  CHECK_THROWS_AS(random_q_cuttable(GenConfig{9, 6, 4, 2, 1}), InvalidConfig);
  CHECK_THROWS_AS(random_q_cuttable(GenConfig{1, 1, 0, 1, 0}), InvalidConfig);
  CHECK_THROWS_AS(random_q_cuttable(GenConfig{1, 4, 1, 0, 0}), InvalidConfig);
  CHECK_THROWS_AS(random_q_cuttable(GenConfig{1, 2, 1, 1, 0}), InvalidConfig);
}

TEST_CASE("displayed trees") {
  auto tree = fixtures::unrooted("level2_blob_tree.upn");
  CHECK(sample_displayed_tree(tree, 1) == tree);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto net = random_q_cuttable(GenConfig{seed, 4 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 3), 2, 0});
    auto t = sample_displayed_tree(net, seed);
    CHECK(validate_unrooted(t).ok());
    CHECK(oracle::cycle_rank(t) == 0);
    CHECK(t.leaf_labels() == net.leaf_labels());
    CHECK(display_oracle(t, net).has_value());
  }
}

TEST_CASE("random 2-balanced formulas") {
  auto f = random_2balanced_cnf(3, 4);
  CHECK(f.m() == 4);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 3 * (1 + static_cast<int>(seed % 4));
    auto cnf = random_2balanced_cnf(n, seed);
    CHECK(validate_2balanced(cnf).ok());
    CHECK(cnf == random_2balanced_cnf(n, seed));
  }
  CHECK_THROWS_AS(random_2balanced_cnf(4, 0), InvalidN);
  CHECK_THROWS_AS(random_2balanced_cnf(0, 0), InvalidN);
}

}  // TEST_SUITE
