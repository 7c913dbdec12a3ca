#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <sstream>

#include "tcnet/cherry.hpp"
#include "tcnet/containment.hpp"
#include "tcnet/cuttable.hpp"
#include "tcnet/error.hpp"
#include "tcnet/genesis.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/orient.hpp"
#include "tcnet/phyloio.hpp"
#include "tcnet/satgadget.hpp"
#include "tcnet/structure.hpp"
#include "tcnet/validate.hpp"

namespace tcnet::cli {

namespace {

class FileError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FileError("cannot write " + path);
  f << text;
  if (!f) throw FileError("cannot write " + path);
}

std::string join(const std::vector<VertexId>& vs) {
  std::string s;
  for (VertexId v : vs) s += (s.empty() ? "" : ",") + to_string(v);
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unrooted phylogenetic network toolkit: cuttability, tree-child orientations, tree containment"};
  app.name("tcnet");
  app.require_subcommand(1);
  std::function<int()> action;

  // recognize
  auto* recognize = app.add_subcommand("recognize", "Decide whether a network is q-cuttable");
  int rq = 1;
  std::string rnet, rmethod = "chains";
  recognize->add_option("--q", rq, "Chain length q")->required();
  recognize->add_option("--method", rmethod, "chains | deletion | brute")
      ->check(CLI::IsMember({"chains", "deletion", "brute"}));
  recognize->add_option("NET", rnet, "Network (UPN/1 or Newick)")->required();
  recognize->callback([&] {
    action = [&] {
      UndirectedNet net = parse_unrooted(read_file(rnet));
      bool yes;
      std::optional<std::vector<VertexId>> witness;
      if (rmethod == "deletion") {
        yes = is_q_cuttable_via_chain_deletion(net, rq);
      } else if (rmethod == "brute") {
        yes = is_q_cuttable_bruteforce(net, rq);
      } else {
        auto rep = is_q_cuttable(net, rq);
        yes = rep.is_cuttable;
        witness = rep.witness_cycle;
      }
      out << "q-cuttable: " << yes_no(yes) << "\n";
      if (witness) out << "witness cycle: " << join(*witness) << "\n";
      return yes ? kOk : kNegative;
    };
  });

  // stats
  auto* stats = app.add_subcommand("stats", "Structural summary of a network");
  std::string snet;
  stats->add_option("NET", snet, "Network (UPN/1 or Newick)")->required();
  stats->callback([&] {
    action = [&] {
      UndirectedNet net = parse_unrooted(read_file(snet));
      auto d = decompose(net);
      auto chains = maximal_chains(net);
      auto mc = max_cuttability(net);
      out << "leaves: " << net.leaf_count() << "\n";
      out << "vertices: " << net.vertex_count() << "\n";
      out << "edges: " << net.edge_count() << "\n";
      out << "cut-edges: " << d.cut.size() << "\n";
      out << "reticulation number: " << reticulation_number(net) << "\n";
      out << "blobs: " << d.blobs.size() << "\n";
      for (std::size_t i = 0; i < d.blobs.size(); ++i)
        out << "  blob " << i << ": " << d.blobs[i].vertices.size() << " vertices, cycle rank "
            << d.blobs[i].cycle_rank() << "\n";
      out << "maximal chains: " << chains.size() << "\n";
      for (const Chain& c : chains)
        out << "  " << join(c.path_vertices) << (c.closed ? " (closed)" : "") << "\n";
      out << "level: " << level(net) << "\n";
      out << "max cuttability: " << (mc ? std::to_string(*mc) : std::string("unbounded (tree)")) << "\n";
      return kOk;
    };
  });

  // orient
  auto* orient = app.add_subcommand("orient", "Find a tree-child orientation");
  std::string onet, omethod = "constructive", oout;
  std::size_t obudget = 20'000'000;
  orient->add_option("NET", onet, "Network (UPN/1 or Newick)")->required();
  orient->add_option("--method", omethod, "constructive | brute")
      ->check(CLI::IsMember({"constructive", "brute"}));
  orient->add_option("--budget", obudget, "Search steps for --method brute");
  orient->add_option("-o,--output", oout, "Output eNewick file (default stdout)");
  orient->callback([&] {
    action = [&] {
      UndirectedNet net = parse_unrooted(read_file(onet));
      std::optional<RootedNet> rooted;
      if (omethod == "brute") {
        rooted = brute_force_tree_child_orientation(net, obudget);
      } else {
        try {
          rooted = tree_child_orient_2cuttable(net);
        } catch (const NotTwoCuttable& e) {
          err << "network is not 2-cuttable: " << e.what() << "\n";
          return kNegative;
        }
      }
      if (!rooted) {
        out << "tree-child orientation: none\n";
        return kNegative;
      }
      write_output(oout, serialize_enewick(*rooted), out);
      return kOk;
    };
  });

  // check-tree-child
  auto* ctc = app.add_subcommand("check-tree-child", "Check that a rooted network is tree-child");
  std::string cnet;
  ctc->add_option("ROOTED", cnet, "Rooted network (eNewick)")->required();
  ctc->callback([&] {
    action = [&] {
      RootedNet net = parse_enewick(read_file(cnet));
      bool yes = is_tree_child(net);
      out << "tree-child: " << yes_no(yes) << "\n";
      return yes ? kOk : kNegative;
    };
  });

  // cherry
  auto* cherry = app.add_subcommand("cherry", "Search for a cherry-picking sequence");
  std::string chnet;
  std::size_t chbudget = 200'000;
  cherry->add_option("NET", chnet, "Network (UPN/1 or Newick)")->required();
  cherry->add_option("--budget", chbudget, "Distinct networks to visit");
  cherry->callback([&] {
    action = [&] {
      UndirectedNet net = parse_unrooted(read_file(chnet));
      auto seq = cherry_picking_sequence(net, chbudget);
      if (!seq) {
        out << "orchard: no\n";
        return kNegative;
      }
      out << "orchard: yes\n";
      for (const auto& [x, y] : seq->pairs) out << "(" << x << "," << y << ")\n";
      return kOk;
    };
  });

  // contain
  auto* contain = app.add_subcommand("contain", "Decide whether a network displays a tree");
  std::string ttree, tnet, ttrace;
  bool toracle = false;
  std::size_t tbudget = 5'000'000;
  contain->add_option("TREE", ttree, "Tree (Newick or UPN/1)")->required();
  contain->add_option("NET", tnet, "Network (UPN/1 or Newick)")->required();
  contain->add_flag("--oracle", toracle, "Use the exhaustive embedding search");
  contain->add_option("--budget", tbudget, "Search steps for --oracle");
  contain->add_option("--trace", ttrace, "Write the TCTRACE/1 trace to this file");
  contain->callback([&] {
    action = [&] {
      UndirectedNet tree = parse_unrooted(read_file(ttree));
      UndirectedNet net = parse_unrooted(read_file(tnet));
      if (toracle) {
        auto emb = display_oracle(tree, net, tbudget);
        out << "displays: " << yes_no(emb.has_value()) << "\n";
        if (emb) {
          for (const auto& [t, u] : emb->vertex_map) out << "  vertex " << t << " -> " << u << "\n";
          for (const auto& [e, p] : emb->edge_map) out << "  edge " << e.a << "-" << e.b << " -> " << join(p) << "\n";
        }
        return emb ? kOk : kNegative;
      }
      auto res = three_cuttable_tc(tree, net);
      out << "displays: " << yes_no(res.displays) << "\n";
      if (!res.displays)
        for (const auto& ev : res.trace)
          if (ev.kind == TraceKind::SplitConflict || ev.kind == TraceKind::No)
            out << "certificate: " << ev.instance << " " << to_string(ev.kind) << " " << ev.detail << "\n";
      if (!ttrace.empty()) write_output(ttrace, serialize_trace(res.trace), out);
      return res.displays ? kOk : kNegative;
    };
  });

  // sat
  auto* sat = app.add_subcommand("sat", "2-balanced 3-SAT reduction");
  sat->require_subcommand(1);
  auto* sreduce = sat->add_subcommand("reduce", "Build the network of a formula");
  std::string scnf, sout, sgmap, sassign, srooted;
  sreduce->add_option("CNF", scnf, "DIMACS formula")->required();
  sreduce->add_option("-o,--output", sout, "Output UPN/1 file")->required();
  sreduce->add_option("--gmap", sgmap, "Output GMAP/1 file")->required();
  sreduce->callback([&] {
    action = [&] {
      CnfInstance cnf = parse_dimacs_cnf(read_file(scnf));
      auto [net, gmap] = build_u_phi(cnf);
      write_output(sout, serialize_upn(net), out);
      write_output(sgmap, serialize_gmap(gmap), out);
      err << "wrote " << net.leaf_count() << " leaves, " << gmap.gadgets.size() << " gadgets\n";
      return kOk;
    };
  });
  auto* sorient = sat->add_subcommand("orient", "Orient the network along a satisfying assignment");
  sorient->add_option("CNF", scnf, "DIMACS formula")->required();
  sorient->add_option("--assignment", sassign, "Assignment: TF string, signed literals, or a file")->required();
  sorient->add_option("-o,--output", sout, "Output eNewick file")->required();
  sorient->add_option("--gmap", sgmap, "Output GMAP/1 file");
  sorient->callback([&] {
    action = [&] {
      CnfInstance cnf = parse_dimacs_cnf(read_file(scnf));
      std::string text = sassign;
      if (std::ifstream probe(sassign); probe) text = read_file(sassign);
      Assignment a = parse_assignment(text, cnf.n());
      RootedNet rooted = build_n_phi(cnf, a);
      write_output(sout, serialize_enewick(rooted), out);
      if (!sgmap.empty()) write_output(sgmap, serialize_gmap(build_u_phi(cnf).second), out);
      return kOk;
    };
  });
  auto* sextract = sat->add_subcommand("extract", "Read an assignment off a tree-child orientation");
  sextract->add_option("ROOTED", srooted, "Rooted network (eNewick)")->required();
  sextract->add_option("--gmap", sgmap, "GMAP/1 file")->required();
  sextract->add_option("--cnf", scnf, "DIMACS formula")->required();
  sextract->callback([&] {
    action = [&] {
      CnfInstance cnf = parse_dimacs_cnf(read_file(scnf));
      GadgetMap gmap = parse_gmap(read_file(sgmap));
      RootedNet rooted = parse_enewick(read_file(srooted));
      // eNewick does not carry vertex ids; match the parsed network onto
      // U_Phi's ids through its leaf labels.
      auto [unet, built] = build_u_phi(cnf);
      if (!(built == gmap)) throw InconsistentGadgetState("gadget map does not belong to this formula");
      UndirectedNet under = underlying_unrooted(rooted);
      auto iso = find_labeled_isomorphism(under, unet);
      if (!iso) throw InconsistentGadgetState("network is not an orientation of the formula's network");
      RootedNet relabeled;
      VertexId root_id = unet.next_id();
      for (VertexId v : rooted.vertices()) {
        VertexId id = v == *rooted.root() ? root_id : iso->at(v);
        relabeled.add_vertex(id);
        if (auto l = rooted.label(v)) relabeled.set_label(id, std::string(*l));
      }
      auto map_id = [&](VertexId v) { return v == *rooted.root() ? root_id : iso->at(v); };
      for (const Arc& arc : rooted.arcs()) relabeled.add_arc(map_id(arc.tail), map_id(arc.head));
      relabeled.set_root(root_id);
      Assignment a = extract_assignment(relabeled, gmap);
      bool sat_ok = satisfies(cnf, a);
      out << "assignment: " << a.to_string() << "\n";
      out << "satisfies: " << yes_no(sat_ok) << "\n";
      return sat_ok ? kOk : kNegative;
    };
  });
  auto* ssolve = sat->add_subcommand("solve", "Brute-force satisfiability");
  ssolve->add_option("CNF", scnf, "DIMACS formula")->required();
  ssolve->callback([&] {
    action = [&] {
      CnfInstance cnf = parse_dimacs_cnf(read_file(scnf));
      auto a = sat_bruteforce(cnf);
      if (!a) {
        out << "satisfiable: no\n";
        return kNegative;
      }
      out << "satisfiable: yes\nassignment: " << a->to_string() << "\n";
      return kOk;
    };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Seeded generators");
  gen->require_subcommand(1);
  std::uint64_t gseed = 0;
  int gleaves = 6, gr = 0, gq = 1, glevel = 0, gn = 3;
  std::string gout;
  auto* gtree = gen->add_subcommand("tree", "Random binary tree");
  gtree->add_option("--leaves", gleaves, "Leaf count")->check(CLI::PositiveNumber);
  gtree->add_option("--seed", gseed, "Seed")->required();
  gtree->add_option("-o,--output", gout, "Output Newick file");
  gtree->callback([&] {
    action = [&] {
      write_output(gout, serialize_newick_tree(random_tree(gleaves, gseed)), out);
      return kOk;
    };
  });
  auto* gnet = gen->add_subcommand("net", "Random q-cuttable network");
  gnet->add_option("--leaves", gleaves, "Leaves of the starting tree");
  gnet->add_option("--r", gr, "Reticulation number");
  gnet->add_option("--q", gq, "Cuttability");
  gnet->add_option("--level", glevel, "Upper bound on the level (0 = none)");
  gnet->add_option("--seed", gseed, "Seed")->required();
  gnet->add_option("-o,--output", gout, "Output UPN/1 file");
  gnet->callback([&] {
    action = [&] {
      GenConfig cfg{gseed, gleaves, gr, gq, glevel};
      write_output(gout, serialize_upn(random_q_cuttable(cfg)), out);
      return kOk;
    };
  });
  std::string gsrc;
  auto* gdisp = gen->add_subcommand("displayed", "Random tree displayed by a network");
  gdisp->add_option("NET", gsrc, "Network (UPN/1 or Newick)")->required();
  gdisp->add_option("--seed", gseed, "Seed")->required();
  gdisp->add_option("-o,--output", gout, "Output Newick file");
  gdisp->callback([&] {
    action = [&] {
      UndirectedNet net = parse_unrooted(read_file(gsrc));
      write_output(gout, serialize_newick_tree(sample_displayed_tree(net, gseed)), out);
      return kOk;
    };
  });
  auto* gcnf = gen->add_subcommand("cnf", "Random 2-balanced 3-CNF");
  gcnf->add_option("--n", gn, "Variables (multiple of 3)");
  gcnf->add_option("--seed", gseed, "Seed")->required();
  gcnf->add_option("-o,--output", gout, "Output DIMACS file");
  gcnf->callback([&] {
    action = [&] {
      write_output(gout, serialize_dimacs_cnf(random_2balanced_cnf(gn, gseed)), out);
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const TooLarge& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace tcnet::cli
