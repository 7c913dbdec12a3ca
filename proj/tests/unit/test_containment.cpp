#include <doctest.h>

#include <algorithm>
#include <random>
#include <variant>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tcnet/containment.hpp"
#include "tcnet/cuttable.hpp"
#include "tcnet/error.hpp"
#include "tcnet/genesis.hpp"
#include "tcnet/phyloio.hpp"
#include "tcnet/validate.hpp"

using namespace tcnet;

namespace {

VertexId V(std::uint32_t v) { return VertexId(v); }

Path P(std::initializer_list<std::uint32_t> ids) {
  Path p;
  for (auto i : ids) p.push_back(V(i));
  return p;
}

// Embedding printed with the worked display example. Tree ids: leaves a..f =
// 1..6, u1..u4 = 11..14. Network ids: leaves 1..6, v1..v8 = 11..18.
Embedding worked_embedding() {
  Embedding emb;
  for (std::uint32_t x = 1; x <= 6; ++x) emb.vertex_map[V(x)] = V(x);
  emb.vertex_map[V(11)] = V(11);
  emb.vertex_map[V(12)] = V(18);
  emb.vertex_map[V(13)] = V(17);
  emb.vertex_map[V(14)] = V(14);
  emb.edge_map[Edge(V(1), V(11))] = P({1, 11});
  emb.edge_map[Edge(V(2), V(11))] = P({2, 12, 11});
  emb.edge_map[Edge(V(11), V(12))] = P({11, 18});
  emb.edge_map[Edge(V(6), V(12))] = P({6, 18});
  emb.edge_map[Edge(V(12), V(13))] = P({18, 17});
  emb.edge_map[Edge(V(5), V(13))] = P({5, 16, 17});
  emb.edge_map[Edge(V(13), V(14))] = P({17, 14});
  emb.edge_map[Edge(V(3), V(14))] = P({3, 13, 14});
  emb.edge_map[Edge(V(4), V(14))] = P({4, 15, 14});
  return emb;
}

Embedding identity(const UndirectedNet& tree) {
  Embedding emb;
  for (VertexId v : tree.vertices()) emb.vertex_map[v] = v;
  for (const Edge& e : tree.edges()) emb.edge_map[e] = {e.a, e.b};
  return emb;
}

Path image(const Embedding& emb, VertexId from, VertexId to) {
  Path p = emb.edge_map.at(Edge(from, to));
  if (from > to) std::reverse(p.begin(), p.end());
  return p;
}

// Edge images are entangled. In a simple network so is every pair of images
// meeting at an internal tree vertex away from a non-leaf neighbor.
void check_entangled_images(const UndirectedNet& tree, const UndirectedNet& net, const Embedding& emb, bool simple) {
  for (const auto& [e, path] : emb.edge_map) CHECK(oracle::entangled(net, path));
  if (!simple) return;
  for (VertexId p : tree.vertices()) {
    if (tree.is_leaf(p)) continue;
    auto nb = tree.neighbors(p);
    for (VertexId q : nb) {
      if (tree.is_leaf(q)) continue;
      std::vector<VertexId> rest;
      for (VertexId w : nb)
        if (w != q) rest.push_back(w);
      Path a = image(emb, p, rest[0]), b = image(emb, p, rest[1]);
      std::reverse(a.begin(), a.end());
      a.insert(a.end(), b.begin() + 1, b.end());
      CHECK(oracle::entangled(net, a));
    }
  }
}

UndirectedNet two_chains_compatible_tree() { return parse_newick_tree("((a,b),c,(d,(f,g)));"); }

}  // namespace

TEST_SUITE("containment") {

TEST_CASE("verifying embeddings") {
  auto tree = fixtures::unrooted("level2_blob_tree.upn");
  auto net = fixtures::unrooted("level2_blob_net.upn");
  CHECK(verify_embedding(tree, net, worked_embedding()));
  CHECK(verify_embedding(tree, tree, identity(tree)));

  auto shared = worked_embedding();
  shared.edge_map[Edge(V(12), V(13))] = P({18, 11, 12, 13, 14, 17});
  auto check = verify_embedding(tree, net, shared);
  CHECK_FALSE(check.ok);
  CHECK(check.violated_property == 5);

  auto moved = worked_embedding();
  moved.vertex_map[V(1)] = V(2);
  CHECK(verify_embedding(tree, net, moved).violated_property == 2);

  auto broken = worked_embedding();
  broken.edge_map[Edge(V(11), V(12))] = P({11, 17});
  CHECK(verify_embedding(tree, net, broken).violated_property == 4);

  CHECK_THROWS_AS(verify_embedding(tree, fixtures::unrooted("square.upn"), identity(tree)), LabelSetMismatch);
}

TEST_CASE("conflicting splits") {
  auto c = conflicting_split(fixtures::unrooted("two_chains_tree.nwk"), fixtures::unrooted("two_chains_net.upn"));
  REQUIRE(c.has_value());
  CHECK(c->first.side_a == std::vector<std::string>{"a", "b", "c"});
  CHECK(c->first.side_b == std::vector<std::string>{"d", "f", "g"});
  CHECK(c->second.side_a == std::vector<std::string>{"a", "b", "g"});
  CHECK(c->second.side_b == std::vector<std::string>{"c", "d", "f"});
  CHECK_FALSE(conflicting_split(two_chains_compatible_tree(), fixtures::unrooted("two_chains_net.upn")).has_value());
  auto t = fixtures::unrooted("caterpillar5.nwk");
  CHECK_FALSE(conflicting_split(t, t).has_value());
}

TEST_CASE("display oracle on the worked examples") {
  auto tree = fixtures::unrooted("level2_blob_tree.upn");
  auto net = fixtures::unrooted("level2_blob_net.upn");
  auto emb = display_oracle(tree, net);
  REQUIRE(emb.has_value());
  CHECK(verify_embedding(tree, net, *emb));
  CHECK(emb->vertex_map.at(V(11)) == V(11));
  CHECK(emb->vertex_map.at(V(12)) == V(18));
  CHECK(oracle::displays(tree, net));

  CHECK_FALSE(display_oracle(fixtures::unrooted("two_chains_tree.nwk"), fixtures::unrooted("two_chains_net.upn")).has_value());
  CHECK_FALSE(oracle::displays(fixtures::unrooted("two_chains_tree.nwk"), fixtures::unrooted("two_chains_net.upn")));

  auto t = fixtures::unrooted("cherries8.nwk");
  auto self = display_oracle(t, t);
  REQUIRE(self.has_value());
  CHECK(verify_embedding(t, t, *self));
  CHECK_THROWS_AS(display_oracle(t, fixtures::unrooted("two_chains_net.upn")), LabelSetMismatch);
  CHECK_THROWS_AS(display_oracle(tree, net, 2), BudgetExceeded);
}

TEST_CASE("branching on a cut-edge") {
  auto net = fixtures::unrooted("two_chains_net.upn");
  auto tree = two_chains_compatible_tree();
  auto br = branch_on_cut_edge(tree, net, Edge(V(10), V(11)));
  CHECK(br.x1 == "_b0.1");
  CHECK(br.x2 == "_b0.2");
  CHECK(br.first.net.leaf_labels() == std::vector<std::string>{"_b0.1", "a", "b", "c"});
  CHECK(br.second.net.leaf_labels() == std::vector<std::string>{"_b0.2", "d", "f", "g"});
  CHECK(br.first.tree.leaf_labels() == br.first.net.leaf_labels());
  CHECK(br.second.tree.leaf_labels() == br.second.net.leaf_labels());
  CHECK(validate_unrooted(br.first.net).ok());
  CHECK(validate_unrooted(br.second.tree).ok());

  CHECK_THROWS_AS(branch_on_cut_edge(tree, net, Edge(V(7), V(8))), NotCutEdge);
  CHECK_THROWS_AS(branch_on_cut_edge(tree, net, Edge(V(1), V(7))), TrivialCutEdge);
  CHECK_THROWS_AS(branch_on_cut_edge(fixtures::unrooted("two_chains_tree.nwk"), net, Edge(V(10), V(11))),
                  NoMatchingTreeEdge);
}

TEST_CASE("branching preserves the answer") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto net = random_q_cuttable(GenConfig{seed, 4 + static_cast<int>(seed % 3), 2 + static_cast<int>(seed % 2), 3, 0});
    auto tree = seed % 2 ? sample_displayed_tree(net, seed) : random_tree(net.leaf_labels(), seed);
    if (conflicting_split(tree, net)) continue;
    for (const Edge& e : oracle::bridges(net)) {
      if (net.is_leaf(e.a) || net.is_leaf(e.b)) continue;
      auto br = branch_on_cut_edge(tree, net, e);
      bool whole = display_oracle(tree, net).has_value();
      bool parts = display_oracle(br.first.tree, br.first.net).has_value() &&
                   display_oracle(br.second.tree, br.second.net).has_value();
      CHECK(whole == parts);
      break;
    }
  }
}

TEST_CASE("entangled paths") {
  auto sq = fixtures::unrooted("square.upn");
  auto p = entangled_path(sq, V(5), V(6));
  REQUIRE(p.has_value());
  CHECK(*p == P({5, 6}));
  CHECK(is_entangled(sq, P({1, 5, 6, 2})));
  CHECK_FALSE(is_entangled(sq, P({1, 5, 6, 7, 3})));
  CHECK_FALSE(entangled_path(sq, V(1), V(3)).has_value());

  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto net = make_q_cuttable(oracle::random_simple_network(4, 1 + static_cast<int>(rng() % 3), rng), 3);
    auto leaves = net.leaves();
    for (std::size_t a = 0; a < leaves.size(); ++a)
      for (std::size_t b = a + 1; b < leaves.size(); ++b) {
        std::vector<Path> found;
        for (auto& path : oracle::simple_paths(net, leaves[a], leaves[b]))
          if (oracle::entangled(net, path)) found.push_back(path);
        REQUIRE(found.size() <= 1);
        auto got = entangled_path(net, leaves[a], leaves[b]);
        CHECK(got.has_value() == !found.empty());
        if (got && !found.empty()) CHECK(*got == found.front());
      }
  }
}

TEST_CASE("pendant structures") {
  auto cat = find_pendant_structures(fixtures::unrooted("caterpillar5.nwk"));
  REQUIRE(std::holds_alternative<PendantTriple>(cat));
  auto t = std::get<PendantTriple>(cat);
  CHECK(t.x == "a");
  CHECK(t.y == "b");
  CHECK(t.z == "c");

  auto quad = find_pendant_structures(fixtures::unrooted("cherries8.nwk"));
  REQUIRE(std::holds_alternative<PendantQuad>(quad));
  auto q = std::get<PendantQuad>(quad);
  CHECK(q.x == "a");
  CHECK(q.y == "b");
  CHECK(q.w == "c");
  CHECK(q.z == "d");
  CHECK(pendant_triples(fixtures::unrooted("cherries8.nwk")).empty());
  CHECK_THROWS_AS(find_pendant_structures(parse_newick_tree("(a,b,c);")), TooFewLeaves);
}

TEST_CASE("reduction rules") {
  auto three = apply_reduction(parse_newick_tree("(a,b,c);"), fixtures::unrooted("triangle_leaf.upn"));
  CHECK(three.verdict == Verdict::Yes);
  CHECK(three.rule == 1);

  auto four = apply_reduction(fixtures::unrooted("quartet.nwk"), fixtures::unrooted("square.upn"));
  CHECK(four.verdict == Verdict::Reduced);
  CHECK(four.rule == 2);
  REQUIRE(four.reduced_net.has_value());
  CHECK(four.reduced_net->edge_count() < fixtures::unrooted("square.upn").edge_count());
  CHECK(validate_unrooted(*four.reduced_net).ok());

  CHECK_THROWS_AS(apply_reduction(two_chains_compatible_tree(), fixtures::unrooted("two_chains_net.upn")), NotSimple);
  CHECK_THROWS_AS(apply_reduction(fixtures::unrooted("quartet.nwk"), fixtures::unrooted("theta.upn")),
                  NotThreeCuttable);
}

TEST_CASE("containment on the worked examples") {
  auto no = three_cuttable_tc(fixtures::unrooted("two_chains_tree.nwk"), fixtures::unrooted("two_chains_net.upn"));
  CHECK_FALSE(no.displays);
  REQUIRE(no.trace.size() == 2);
  CHECK(no.trace[0].kind == TraceKind::SplitConflict);
  CHECK(serialize_trace(no.trace) ==
        "TCTRACE/1\n0 SPLIT-CONFLICT a,b,c|d,f,g a,b,g|c,d,f\n0 NO conflicting split\n");

  auto yes = three_cuttable_tc(two_chains_compatible_tree(), fixtures::unrooted("two_chains_net.upn"));
  CHECK(yes.displays);
  CHECK(yes.trace.front().kind == TraceKind::Branch);

  CHECK_THROWS_AS(three_cuttable_tc(fixtures::unrooted("level2_blob_tree.upn"), fixtures::unrooted("level2_blob_net.upn")),
                  NotThreeCuttable);
  CHECK_THROWS_AS(three_cuttable_tc(fixtures::unrooted("square.upn"), fixtures::unrooted("square.upn")), NotATree);
  CHECK_THROWS_AS(three_cuttable_tc(fixtures::unrooted("cherries8.nwk"), fixtures::unrooted("square.upn")),
                  LabelSetMismatch);
}

TEST_CASE("containment agrees with both oracles on random instances") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    GenConfig cfg{seed, 3 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 3), 3, 0};
    auto net = random_q_cuttable(cfg);
    auto tree = seed % 2 ? sample_displayed_tree(net, seed) : random_tree(net.leaf_labels(), seed * 7);
    CAPTURE(seed);
    auto res = three_cuttable_tc(tree, net, true);
    auto emb = display_oracle(tree, net);
    CHECK(res.displays == emb.has_value());
    if (oracle::cycle_rank(net) <= 3) CHECK(res.displays == oracle::displays(tree, net));
    std::size_t cut = 0;
    for (const Edge& e : oracle::bridges(net)) cut += !net.is_leaf(e.a) && !net.is_leaf(e.b);
    if (emb) {
      CHECK(verify_embedding(tree, net, *emb));
      check_entangled_images(tree, net, *emb, cut == 0);
    }
    std::size_t steps = 0;
    for (const auto& ev : res.trace) {
      steps += ev.kind == TraceKind::Elim || ev.kind == TraceKind::Branch;
      if (ev.kind != TraceKind::Elim) continue;
      REQUIRE(ev.after.has_value());
      CHECK(validate_unrooted(*ev.after).ok());
      CHECK(is_q_cuttable(*ev.after, 3).is_cuttable);
      CHECK(display_oracle(*ev.tree, *ev.before).has_value() == display_oracle(*ev.tree, *ev.after).has_value());
    }
    CHECK(steps <= net.edge_count() + cut);
  }
}

}  // TEST_SUITE
