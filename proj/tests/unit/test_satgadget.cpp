#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tcnet/error.hpp"
#include "tcnet/genesis.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/orient.hpp"
#include "tcnet/phyloio.hpp"
#include "tcnet/satgadget.hpp"
#include "tcnet/structure.hpp"
#include "tcnet/validate.hpp"

using namespace tcnet;

namespace {

using Pattern = std::vector<std::pair<std::string, std::string>>;

const Pattern kConnectionLeft = {{"s", "u"}, {"u", "v"}, {"u", "w"}, {"v", "w'"}, {"w'", "w"}, {"v", "t"}};
const Pattern kConnectionRight = {{"t", "v"}, {"v", "u"}, {"v", "w'"}, {"u", "w"}, {"w", "w'"}, {"u", "s"}};
const Pattern kReticulation = {{"s", "u"},  {"u", "v"},  {"u", "v'"}, {"v", "v'"}, {"v", "w"},
                               {"v'", "w'"}, {"w", "r"}, {"w'", "r"}, {"r", "t"}};

bool follows(const RootedNet& net, const GadgetCopy& g, const Pattern& p) {
  for (const auto& [a, b] : p)
    if (!net.has_arc(g.at(a), g.at(b))) return false;
  return true;
}

std::size_t expected_leaves(const CnfInstance& cnf) {
  std::size_t nr = 2 * cnf.n() + 1, nc = 2 * cnf.n() + 3 * cnf.m();
  return 2 + 2 * (nr + nc) + 3 * cnf.m();
}

}  // namespace

TEST_SUITE("satgadget") {

TEST_CASE("2-balanced check") {
  CHECK(validate_2balanced(fixtures::worked_formula()).ok());
  CHECK(validate_2balanced(fixtures::cnf("balanced6.cnf")).ok());
  auto rep = validate_2balanced(fixtures::cnf("unsat3.cnf"));
  CHECK_FALSE(rep.ok());
  CHECK(rep.count(ViolationKind::OccurrenceCount) > 0);
}

TEST_CASE("standalone gadgets") {
  auto c = connection_gadget();
  CHECK(c.net.edge_count() == 8);
  CHECK(c.net.leaf_count() == 2);
  CHECK(oracle::cycle_rank(c.net) == 1);
  auto r = reticulation_gadget();
  CHECK(r.net.edge_count() == 11);
  CHECK(r.net.leaf_count() == 2);
  CHECK(oracle::cycle_rank(r.net) == 2);
  for (const char* name : {"s", "t", "u", "v", "w", "w'", "l", "l'"}) CHECK(c.vertex.contains(name));
  for (const char* name : {"v'", "r"}) CHECK(r.vertex.contains(name));
}

TEST_CASE("network of the worked formula") {
  auto phi = fixtures::worked_formula();
  auto [net, gmap] = build_u_phi(phi);
  CHECK(validate_unrooted(net).ok());
  CHECK(net.leaf_count() == 64);
  CHECK(gmap.count(GadgetKind::Reticulation) == 7);
  CHECK(gmap.count(GadgetKind::Connection) == 18);
  CHECK(parse_gmap(serialize_gmap(gmap)) == gmap);
  CHECK(serialize_gmap(parse_gmap(serialize_gmap(gmap))) == serialize_gmap(gmap));
  CHECK_THROWS_AS(build_u_phi(fixtures::cnf("unsat3.cnf")), NotTwoBalanced);
}

TEST_CASE("orientation from the worked assignment") {
  auto phi = fixtures::worked_formula();
  auto [net, gmap] = build_u_phi(phi);
  Assignment beta{{true, false, false}};
  auto rooted = build_n_phi(phi, beta);
  CHECK(validate_rooted(rooted).ok());
  CHECK(is_tree_child(rooted));
  CHECK(oracle::tree_child(rooted));
  CHECK(serialize_upn(underlying_unrooted(rooted)) == serialize_upn(net));
  CHECK(extract_assignment(rooted, gmap) == beta);

  for (const auto& g : gmap.gadgets) {
    CAPTURE(g.role);
    if (g.kind == GadgetKind::Reticulation)
      CHECK(follows(rooted, g, kReticulation));
    else
      CHECK((follows(rooted, g, kConnectionLeft) || follows(rooted, g, kConnectionRight)));
  }
  CHECK_THROWS_AS(build_n_phi(phi, Assignment{{false, true, false}}), UnsatisfiedAssignment);
  CHECK_THROWS_AS(build_n_phi(phi, Assignment{{true, false}}), UnsatisfiedAssignment);
}

TEST_CASE("extraction rejects foreign orientations") {
  auto phi = fixtures::worked_formula();
  auto gmap = build_u_phi(phi).second;
  auto rooted = build_n_phi(phi, Assignment{{true, false, false}});
  // Flip both t-terminal arcs of one variable gadget toward s.
  const auto& g = gmap.gadget("G_1^1");
  RootedNet bent = rooted;
  bent.remove_arc(g.at("v"), g.at("t"));
  bent.add_arc(g.at("t"), g.at("v"));
  CHECK_THROWS_AS(extract_assignment(bent, gmap), Error);
}

TEST_CASE("brute-force satisfiability") {
  CHECK(sat_bruteforce(fixtures::worked_formula()).has_value());
  CHECK_FALSE(sat_bruteforce(fixtures::cnf("unsat3.cnf")).has_value());
  CHECK_THROWS_AS(sat_bruteforce(fixtures::cnf("balanced6.cnf"), 4), TooLarge);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto cnf = random_2balanced_cnf(3 * (1 + static_cast<int>(seed % 3)), seed);
    auto a = sat_bruteforce(cnf);
    CHECK(a.has_value() == oracle::satisfiable(cnf));
    if (a) CHECK(oracle::evaluates_true(cnf, a->values));
  }
}

TEST_CASE("random formulas: sizes and round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto cnf = random_2balanced_cnf(seed % 2 ? 3 : 6, seed);
    auto [net, gmap] = build_u_phi(cnf);
    CHECK(net.leaf_count() == expected_leaves(cnf));
    auto beta = sat_bruteforce(cnf);
    if (!beta) continue;
    auto rooted = build_n_phi(cnf, *beta);
    CHECK(oracle::tree_child(rooted));
    auto back = extract_assignment(rooted, gmap);
    CHECK(oracle::evaluates_true(cnf, back.values));
  }
}

}  // TEST_SUITE
