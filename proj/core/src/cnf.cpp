#include "tcnet/cnf.hpp"

#include <cctype>
#include <sstream>

#include "tcnet/error.hpp"

namespace tcnet {

CnfInstance::CnfInstance(int n, std::vector<Clause> clauses)
    : n_(n), clauses_(std::move(clauses)), pos_(n), neg_(n) {
  for (int j = 0; j < m(); ++j)
    for (int k = 0; k < 3; ++k) {
      const Literal& l = clauses_[j][k];
      if (l.var < 1 || l.var > n_)
        throw SyntaxError(j + 1, k + 1, "variable " + std::to_string(l.var) + " out of range");
      (l.negated ? neg_ : pos_)[l.var - 1].push_back(Occurrence{j, k});
    }
}

std::string Assignment::to_string() const {
  std::string s;
  for (bool b : values) s += b ? 'T' : 'F';
  return s;
}

bool satisfies(const CnfInstance& cnf, const Assignment& a) {
  if (static_cast<int>(a.values.size()) != cnf.n()) return false;
  for (const Clause& c : cnf.clauses()) {
    bool sat = false;
    for (const Literal& l : c) sat = sat || a.eval(l);
    if (!sat) return false;
  }
  return true;
}

Assignment parse_assignment(const std::string& text, int n) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  bool letters = !compact.empty() && compact.find_first_not_of("TFtf") == std::string::npos;
  Assignment a;
  if (letters) {
    if (static_cast<int>(compact.size()) != n)
      throw SyntaxError(1, 1, "expected " + std::to_string(n) + " values, got " + std::to_string(compact.size()));
    for (char c : compact) a.values.push_back(c == 'T' || c == 't');
    return a;
  }
  a.values.assign(n, false);
  std::vector<bool> seen(n, false);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    int col = 0;
    while (ls >> tok) {
      ++col;
      if (tok == "v" || tok == "V" || tok == "s" || tok == "SAT" || tok == "SATISFIABLE") continue;
      int x = 0;
      try {
        std::size_t used = 0;
        x = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw SyntaxError(lineno, col, "bad literal '" + tok + "'");
      }
      if (x == 0) continue;
      int v = x < 0 ? -x : x;
      if (v > n) throw SyntaxError(lineno, col, "variable " + std::to_string(v) + " out of range");
      a.values[v - 1] = x > 0;
      seen[v - 1] = true;
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw SyntaxError(lineno, 1, "no value for variable " + std::to_string(i + 1));
  return a;
}

}  // namespace tcnet
