#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/orient.hpp"
#include "tcnet/phyloio.hpp"

namespace fs = std::filesystem;
using tcnet::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "tcnet_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("recognize") {
  auto r = call({"recognize", "--q", "3", fixtures::path("cherry3.upn")});
  CHECK(r.code == 0);
  CHECK(r.out == "q-cuttable: yes\n");
  r = call({"recognize", "--q", "2", fixtures::path("theta.upn")});
  CHECK(r.code == 1);
  CHECK(r.out.find("q-cuttable: no") == 0);
  CHECK(r.out.find("witness cycle: 5,") != std::string::npos);
  for (const char* method : {"deletion", "brute"})
    CHECK(call({"recognize", "--q", "4", "--method", method, fixtures::path("two_chains_net.upn")}).code == 0);
}

TEST_CASE("usage and input errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"stats", "--bogus", fixtures::path("square.upn")}).code == 2);
  auto r = call({"stats", "/no/such/file.upn"});
  CHECK(r.code == 2);
  CHECK(r.err.find("/no/such/file.upn") != std::string::npos);
  CHECK(call({"stats", fixtures::path("phi.cnf")}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("stats") {
  auto r = call({"stats", fixtures::path("two_chains_net.upn")});
  CHECK(r.code == 0);
  CHECK(r.out.find("leaves: 6\n") != std::string::npos);
  CHECK(r.out.find("reticulation number: 2\n") != std::string::npos);
  CHECK(r.out.find("blobs: 2\n") != std::string::npos);
  CHECK(r.out.find("level: 1\n") != std::string::npos);
  CHECK(r.out.find("max cuttability: 4\n") != std::string::npos);
}

TEST_CASE("orient and check") {
  auto out = scratch("level2_blob.enw");
  CHECK(call({"orient", fixtures::path("level2_blob_net.upn"), "-o", out.string()}).code == 0);
  auto rooted = tcnet::parse_enewick(slurp(out));
  CHECK(tcnet::is_tree_child(rooted));
  CHECK(slurp(out) == tcnet::serialize_enewick(tcnet::tree_child_orient_2cuttable(fixtures::unrooted("level2_blob_net.upn"))));
  CHECK(call({"check-tree-child", out.string()}).code == 0);
  CHECK(call({"check-tree-child", fixtures::path("stack.enw")}).code == 1);
  CHECK(call({"orient", fixtures::path("non_orientable.upn")}).code == 1);
  auto brute = call({"orient", "--method", "brute", fixtures::path("non_orientable.upn")});
  CHECK(brute.code == 1);
  CHECK(brute.out == "tree-child orientation: none\n");
  CHECK(call({"orient", "--method", "brute", "--budget", "2", fixtures::path("level2_blob_net.upn")}).code == 3);
}

TEST_CASE("contain") {
  auto trace = scratch("two_chains.trace");
  auto r = call({"contain", fixtures::path("two_chains_tree.nwk"), fixtures::path("two_chains_net.upn"), "--trace", trace.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("displays: no\n") == 0);
  CHECK(r.out.find("SPLIT-CONFLICT a,b,c|d,f,g a,b,g|c,d,f") != std::string::npos);
  CHECK(slurp(trace).rfind("TCTRACE/1\n", 0) == 0);
  r = call({"contain", "--oracle", fixtures::path("level2_blob_tree.nwk"), fixtures::path("level2_blob_net.upn")});
  CHECK(r.code == 0);
  CHECK(r.out.find("displays: yes\n") == 0);
  CHECK(call({"contain", fixtures::path("level2_blob_tree.nwk"), fixtures::path("level2_blob_net.upn")}).code == 2);
}

TEST_CASE("sat pipeline") {
  auto net = scratch("uphi.upn"), gmap = scratch("uphi.gmap"), rooted = scratch("nphi.enw");
  CHECK(call({"sat", "reduce", fixtures::path("phi.cnf"), "-o", net.string(), "--gmap", gmap.string()}).code == 0);
  auto stats = call({"stats", net.string()});
  CHECK(stats.out.find("leaves: 64\n") != std::string::npos);
  CHECK(call({"sat", "orient", fixtures::path("phi.cnf"), "--assignment", "TFF", "-o", rooted.string()}).code == 0);
  auto r = call({"sat", "extract", rooted.string(), "--gmap", gmap.string(), "--cnf", fixtures::path("phi.cnf")});
  CHECK(r.code == 0);
  CHECK(r.out == "assignment: TFF\nsatisfies: yes\n");
  CHECK(call({"sat", "orient", fixtures::path("phi.cnf"), "--assignment", "FTF", "-o", rooted.string()}).code == 2);
  CHECK(call({"sat", "solve", fixtures::path("unsat3.cnf")}).code == 1);
  CHECK(call({"sat", "reduce", fixtures::path("unsat3.cnf"), "-o", net.string(), "--gmap", gmap.string()}).code == 2);
}

TEST_CASE("generators are reproducible") {
  auto a = call({"gen", "net", "--leaves", "5", "--r", "2", "--q", "3", "--seed", "42"});
  auto b = call({"gen", "net", "--leaves", "5", "--r", "2", "--q", "3", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(call({"gen", "tree", "--leaves", "7", "--seed", "5"}).out == fixtures::text("gen_tree7.nwk"));
  CHECK(call({"gen", "cnf", "--n", "6", "--seed", "11"}).out == fixtures::text("gen_cnf6.cnf"));
  CHECK(call({"gen", "cnf", "--n", "4", "--seed", "1"}).code == 2);
  auto disp = call({"gen", "displayed", fixtures::path("gen_q3_s1.upn"), "--seed", "3"});
  CHECK(disp.code == 0);
  auto tree = tcnet::parse_newick_tree(disp.out);
  CHECK(tree.leaf_labels() == fixtures::unrooted("gen_q3_s1.upn").leaf_labels());
}

TEST_CASE("cherry") {
  auto r = call({"cherry", fixtures::path("square.upn")});
  CHECK(r.code == 0);
  CHECK(r.out.find("orchard: yes\n") == 0);
}
