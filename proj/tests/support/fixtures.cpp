#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tcnet/phyloio.hpp"

namespace fixtures {

std::string path(const std::string& name) { return std::string(TCNET_FIXTURE_DIR) + "/" + name; }

std::string text(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

tcnet::UndirectedNet unrooted(const std::string& name) { return tcnet::parse_unrooted(text(name)); }
tcnet::RootedNet rooted(const std::string& name) { return tcnet::parse_enewick(text(name)); }
tcnet::CnfInstance cnf(const std::string& name) { return tcnet::parse_dimacs_cnf(text(name)); }

tcnet::CnfInstance worked_formula() {
  using tcnet::Literal;
  auto L = Literal::from_dimacs;
  return tcnet::CnfInstance(3, {{L(1), L(-2), L(3)}, {L(-1), L(2), L(-3)}, {L(1), L(2), L(-3)}, {L(-1), L(-2), L(3)}});
}

}  // namespace fixtures
