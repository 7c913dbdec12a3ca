#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tcnet {

/// Literal over variables numbered 1..n.
struct Literal {
  int var = 0;
  bool negated = false;

  int dimacs() const { return negated ? -var : var; }
  static Literal from_dimacs(int x) { return Literal{x < 0 ? -x : x, x < 0}; }
  auto operator<=>(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

struct Occurrence {
  int clause = 0;    // 0-based clause index
  int position = 0;  // 0..2 inside the clause
  auto operator<=>(const Occurrence&) const = default;
};

/// 3-CNF formula with per-variable occurrence lists in clause order.
class CnfInstance {
 public:
  CnfInstance() = default;
  CnfInstance(int n, std::vector<Clause> clauses);

  int n() const { return n_; }
  int m() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(int j) const { return clauses_.at(j); }
  /// Occurrences of x_var (1-based) as a positive / negative literal.
  const std::vector<Occurrence>& positive(int var) const { return pos_.at(var - 1); }
  const std::vector<Occurrence>& negative(int var) const { return neg_.at(var - 1); }

  friend bool operator==(const CnfInstance& a, const CnfInstance& b) {
    return a.n_ == b.n_ && a.clauses_ == b.clauses_;
  }

 private:
  int n_ = 0;
  std::vector<Clause> clauses_;
  std::vector<std::vector<Occurrence>> pos_, neg_;
};

/// Truth assignment; values[i] is the value of x_{i+1}.
struct Assignment {
  std::vector<bool> values;

  bool value(int var) const { return values.at(var - 1); }
  bool eval(const Literal& l) const { return value(l.var) != l.negated; }
  /// "TFF" form.
  std::string to_string() const;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

bool satisfies(const CnfInstance& cnf, const Assignment& a);

/// Accepts "TFT" strings or DIMACS-style signed literals ("1 -2 3 0",
/// optionally prefixed by "v" lines). Throws SyntaxError.
Assignment parse_assignment(const std::string& text, int n);

}  // namespace tcnet
