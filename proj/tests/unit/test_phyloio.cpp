#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tcnet/error.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/orient.hpp"
#include "tcnet/phyloio.hpp"
#include "tcnet/validate.hpp"

using namespace tcnet;

TEST_SUITE("phyloio") {

TEST_CASE("UPN round trip is byte stable") {
  for (const char* name : {"level2_blob_net.upn", "two_chains_net.upn", "theta.upn", "square.upn", "single.upn",
                           "non_orientable.upn", "gen_q3_s1.upn", "gen_q2_s7.upn"}) {
    INFO(name);
    auto net = parse_upn(fixtures::text(name));
    std::string once = serialize_upn(net);
    CHECK(once == fixtures::text(name));
    CHECK(parse_upn(once) == net);
  }
}

TEST_CASE("UPN accepts comments and any record order") {
  auto net = parse_upn("UPN/1\n# a cherry\nE 1 4\nE 4 2\nE 3 4\nL 1 a\nL 2 b\nL 3 c\nV 4\nV 1\nV 2\nV 3 # last\n");
  CHECK(serialize_upn(net) == fixtures::text("cherry3.upn"));
}

TEST_CASE("UPN errors") {
  CHECK_THROWS_AS(parse_upn("UPN/2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_upn("UPN/1\nV x\n"), SyntaxError);
  CHECK_THROWS_AS(parse_upn("UPN/1\nV 1\nE 1 2\n"), Error);
  try {
    parse_upn("UPN/1\nV 1\nV 2\nQ 1 2\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_upn("UPN/1\nV 1\nV 2\nV 3\nL 1 a\nL 2 b\nE 1 3\nE 3 2\n"), ValidationError);
}

TEST_CASE("eNewick round trip") {
  for (const char* name : {"tc_simple.enw", "stack.enw", "sibling_reticulations.enw", "gen_q2_s7.enw"}) {
    INFO(name);
    auto net = parse_enewick(fixtures::text(name));
    CHECK(validate_rooted(net).ok());
    std::string once = serialize_enewick(net);
    auto again = parse_enewick(once);
    CHECK(rooted_isomorphic(net, again));
    CHECK(serialize_enewick(again) == once);
  }
  auto net = parse_enewick("((a:1.5,(b:2)#H1:0.1),(#H1:0.3,c));");
  CHECK(net.reticulation_count() == 1);
  CHECK_THROWS_AS(parse_enewick("((a,b);"), SyntaxError);
  CHECK_THROWS_AS(parse_enewick("((a,#H1),(b,c));"), Error);
}

TEST_CASE("Newick trees") {
  for (const char* name : {"quartet.nwk", "caterpillar5.nwk", "cherries8.nwk", "two_chains_tree.nwk", "gen_tree7.nwk"}) {
    INFO(name);
    auto tree = parse_newick_tree(fixtures::text(name));
    CHECK(validate_unrooted(tree).ok());
    std::string once = serialize_newick_tree(tree);
    auto again = parse_newick_tree(once);
    CHECK(labeled_isomorphic(tree, again));
    CHECK(serialize_newick_tree(again) == once);
    CHECK(oracle::tree_splits(again) == oracle::tree_splits(tree));
  }
  auto rooted_form = parse_newick_tree("((a,b),(c,d));");
  CHECK(labeled_isomorphic(rooted_form, parse_newick_tree("(a,b,(c,d));")));
  CHECK_THROWS_AS(parse_newick_tree("(a,b,c,d);"), NotBinary);
  CHECK_THROWS_AS(serialize_newick_tree(fixtures::unrooted("square.upn")), NotATree);
  CHECK(labeled_isomorphic(fixtures::unrooted("level2_blob_tree.nwk"), fixtures::unrooted("level2_blob_tree.upn")));
}

TEST_CASE("DIMACS") {
  auto cnf = fixtures::cnf("phi.cnf");
  CHECK(cnf == fixtures::worked_formula());
  CHECK(cnf.m() == 4);
  CHECK(cnf.positive(1).size() == 2);
  CHECK(cnf.negative(2).size() == 2);
  for (const char* name : {"phi.cnf", "balanced6.cnf", "unsat3.cnf", "gen_cnf6.cnf"}) {
    INFO(name);
    auto f = fixtures::cnf(name);
    std::string once = serialize_dimacs_cnf(f);
    CHECK(parse_dimacs_cnf(once) == f);
    CHECK(serialize_dimacs_cnf(parse_dimacs_cnf(once)) == once);
  }
  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 2 0\n"), ClauseArityError);
  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 x 2 0\n"), SyntaxError);
}

TEST_CASE("assignments") {
  CHECK(parse_assignment("TFF", 3).to_string() == "TFF");
  CHECK(parse_assignment("1 -2 -3 0", 3).to_string() == "TFF");
  CHECK_THROWS_AS(parse_assignment("TF", 3), Error);
}

TEST_CASE("random networks survive a UPN round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    auto net = oracle::random_network(2 + static_cast<int>(rng() % 9), static_cast<int>(rng() % 5), rng);
    CHECK(parse_upn(serialize_upn(net)) == net);
  }
}

}  // TEST_SUITE
