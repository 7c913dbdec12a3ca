#include "tcnet/phyloio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "tcnet/edit.hpp"
#include "tcnet/error.hpp"
#include "tcnet/structure.hpp"
#include "tcnet/validate.hpp"

namespace tcnet {

namespace {

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

bool valid_label(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), label_char);
}

struct Token {
  std::string text;
  int col;
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back(Token{std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) out.push_back(text.substr(start));
      break;
    }
    std::string_view l = text.substr(start, nl - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    out.push_back(l);
    start = nl + 1;
  }
  return out;
}

std::uint32_t parse_id(const Token& t, int line) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size() || v == 0)
    throw SyntaxError(line, t.col, "expected a positive integer id, got '" + t.text + "'");
  return v;
}

}  // namespace

// ---------------------------------------------------------------- UPN/1

UndirectedNet parse_upn(std::string_view text) {
  struct Record {
    int line;
    std::vector<Token> toks;
  };
  std::vector<Record> records;
  bool header = false;
  int lineno = 0;
  for (std::string_view raw : lines_of(text)) {
    ++lineno;
    std::string_view l = raw.substr(0, raw.find('#'));
    auto toks = split_tokens(l);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 1 || toks[0].text != "UPN/1")
        throw SyntaxError(lineno, toks[0].col, "expected header 'UPN/1'");
      header = true;
      continue;
    }
    records.push_back(Record{lineno, std::move(toks)});
  }
  if (!header) throw SyntaxError(lineno == 0 ? 1 : lineno, 1, "missing header 'UPN/1'");

  UndirectedNet net;
  auto expect = [](const Record& r, std::size_t n) {
    if (r.toks.size() != n) {
      int col = r.toks.size() > n ? r.toks[n].col : r.toks.back().col;
      throw SyntaxError(r.line, col,
                        "'" + r.toks[0].text + "' takes " + std::to_string(n - 1) + " field(s)");
    }
  };
  for (const Record& r : records) {
    const std::string& kw = r.toks[0].text;
    if (kw == "V") {
      expect(r, 2);
      VertexId id(parse_id(r.toks[1], r.line));
      if (net.has_vertex(id)) throw SyntaxError(r.line, r.toks[1].col, "vertex " + to_string(id) + " declared twice");
      net.add_vertex(id);
    } else if (kw != "L" && kw != "E") {
      throw SyntaxError(r.line, r.toks[0].col, "unknown record '" + kw + "'");
    }
  }
  auto declared = [&](const Record& r, std::size_t i) {
    VertexId id(parse_id(r.toks[i], r.line));
    if (!net.has_vertex(id)) throw SyntaxError(r.line, r.toks[i].col, "undeclared vertex " + to_string(id));
    return id;
  };
  for (const Record& r : records) {
    const std::string& kw = r.toks[0].text;
    if (kw == "L") {
      expect(r, 3);
      VertexId id = declared(r, 1);
      if (!valid_label(r.toks[2].text)) throw SyntaxError(r.line, r.toks[2].col, "invalid label '" + r.toks[2].text + "'");
      if (net.label(id)) throw SyntaxError(r.line, r.toks[1].col, "vertex " + to_string(id) + " labeled twice");
      net.set_label(id, r.toks[2].text);
    } else if (kw == "E") {
      expect(r, 3);
      VertexId a = declared(r, 1), b = declared(r, 2);
      net.add_edge(a, b);
    }
  }
  auto report = validate_unrooted(net);
  if (!report.ok()) throw ValidationError(std::move(report));
  return net;
}

std::string serialize_upn(const UndirectedNet& net) {
  std::ostringstream os;
  os << "UPN/1\n";
  for (VertexId v : net.vertices()) os << "V " << v << '\n';
  for (const auto& [v, l] : net.labeled_vertices()) os << "L " << v << ' ' << l << '\n';
  for (const Edge& e : net.edges()) os << "E " << e.a << ' ' << e.b << '\n';
  return os.str();
}

// ---------------------------------------------------------------- Newick

namespace {

struct PNode {
  std::string label;
  std::string hybrid;  // tag without '#', empty if none
  std::vector<int> children;
  bool parenthesized = false;
  int line = 1, col = 1;
};

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : s_(text) {}

  std::vector<PNode> parse() {
    skip_ws();
    if (eof()) throw SyntaxError(line_, col_, "empty input");
    subtree();
    skip_ws();
    if (eof() || peek() != ';') throw SyntaxError(line_, col_, "expected ';'");
    advance();
    skip_ws();
    if (!eof()) throw SyntaxError(line_, col_, "trailing text after ';'");
    return std::move(nodes_);
  }

 private:
  bool eof() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip_ws() {
    while (!eof()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '[') {
        int l = line_, c = col_;
        while (!eof() && peek() != ']') advance();
        if (eof()) throw SyntaxError(l, c, "unterminated comment");
        advance();
      } else {
        break;
      }
    }
  }

  int subtree() {
    skip_ws();
    if (eof()) throw SyntaxError(line_, col_, "unexpected end of input");
    int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[id].line = line_;
    nodes_[id].col = col_;
    if (peek() == '(') {
      advance();
      nodes_[id].parenthesized = true;
      while (true) {
        int c = subtree();
        nodes_[id].children.push_back(c);
        skip_ws();
        if (eof()) throw SyntaxError(line_, col_, "unexpected end of input, expected ',' or ')'");
        if (peek() == ',') {
          advance();
          continue;
        }
        if (peek() == ')') {
          advance();
          break;
        }
        throw SyntaxError(line_, col_, std::string("unexpected '") + peek() + "'");
      }
    }
    skip_ws();
    int lcol = col_, lline = line_;
    std::string label;
    while (!eof() && label_char(peek())) {
      label += peek();
      advance();
    }
    if (!label.empty() && nodes_[id].parenthesized)
      throw SyntaxError(lline, lcol, "internal node labels are not supported");
    nodes_[id].label = label;
    if (!eof() && peek() == '#') {
      advance();
      std::string tag;
      while (!eof() && std::isalnum(static_cast<unsigned char>(peek()))) {
        tag += peek();
        advance();
      }
      if (tag.empty() || !std::isdigit(static_cast<unsigned char>(tag.back())))
        throw SyntaxError(line_, col_, "malformed hybrid tag");
      nodes_[id].hybrid = tag;
    }
    skip_ws();
    while (!eof() && peek() == ':') {
      advance();
      while (!eof() && peek() != ',' && peek() != ')' && peek() != ';' && peek() != ':') advance();
    }
    if (!nodes_[id].parenthesized && label.empty() && nodes_[id].hybrid.empty())
      throw SyntaxError(nodes_[id].line, nodes_[id].col, "empty leaf");
    return id;
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
  std::vector<PNode> nodes_;
};

}  // namespace

RootedNet parse_enewick(std::string_view text) {
  auto nodes = NewickParser(text).parse();
  RootedNet net;
  std::vector<VertexId> vid(nodes.size());
  std::map<std::string, VertexId> hybrid;
  std::map<std::string, int> hybrid_def;  // node index that carries children or label
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const PNode& p = nodes[i];
    if (!p.hybrid.empty()) {
      auto it = hybrid.find(p.hybrid);
      if (it == hybrid.end()) {
        it = hybrid.emplace(p.hybrid, net.add_vertex()).first;
      }
      vid[i] = it->second;
      if (p.parenthesized || !p.label.empty()) {
        if (hybrid_def.contains(p.hybrid))
          throw SyntaxError(p.line, p.col, "hybrid #" + p.hybrid + " defined twice");
        hybrid_def[p.hybrid] = static_cast<int>(i);
      }
    } else {
      vid[i] = net.add_vertex();
    }
    if (!p.label.empty()) {
      if (net.find_leaf(p.label))
        throw SyntaxError(p.line, p.col, "duplicate label '" + p.label + "'");
      net.set_label(vid[i], p.label);
    }
  }
  for (const auto& [tag, v] : hybrid)
    if (!hybrid_def.contains(tag)) throw SyntaxError(1, 1, "hybrid #" + tag + " has no definition");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int c : nodes[i].children) net.add_arc(vid[i], vid[c]);
  net.set_root(vid[0]);

  VertexId root = vid[0];
  for (VertexId v : net.vertices()) {
    std::size_t in = net.in_degree(v), out = net.out_degree(v);
    std::set<VertexId> uniq(net.children(v).begin(), net.children(v).end());
    if (uniq.size() != out)
      throw DegreeError("vertex " + to_string(v) + " has parallel arcs to one child");
    bool ok;
    if (v == root)
      ok = in == 0 && out == 2;
    else if (out == 0)
      ok = in == 1 && net.label(v).has_value();
    else
      ok = (in == 1 && out == 2) || (in == 2 && out == 1);
    if (!ok) {
      std::string what = v == root ? "root" : out == 0 ? "leaf" : "vertex";
      throw DegreeError(what + " " + to_string(v) + " has in-degree " + std::to_string(in) +
                        " and out-degree " + std::to_string(out));
    }
  }
  auto report = validate_rooted(net);
  if (report.count(ViolationKind::Cycle) > 0) throw CycleError("hybrid tags form a directed cycle");
  if (!report.ok()) throw ValidationError(std::move(report));
  return net;
}

std::string serialize_enewick(const RootedNet& net) {
  if (!net.root()) throw InvalidOrientationSpec("rooted network has no root");
  std::map<VertexId, std::string> min_label;
  std::map<VertexId, std::size_t> leaf_count;
  std::function<void(VertexId)> fill = [&](VertexId v) {
    if (min_label.contains(v)) return;
    std::string best;
    std::set<VertexId> below;
    if (auto l = net.label(v)) best = std::string(*l);
    std::size_t cnt = net.out_degree(v) == 0 ? 1 : 0;
    for (VertexId c : net.children(v)) {
      fill(c);
      if (best.empty() || min_label[c] < best) best = min_label[c];
      cnt += leaf_count[c];
    }
    min_label[v] = best;
    leaf_count[v] = cnt;
  };
  fill(*net.root());
  std::map<VertexId, int> tag;
  int next_tag = 1;
  std::string out;
  std::function<void(VertexId)> emit = [&](VertexId v) {
    bool hyb = net.in_degree(v) >= 2;
    if (hyb && tag.contains(v)) {
      out += "#H" + std::to_string(tag[v]);
      return;
    }
    if (hyb) tag[v] = next_tag++;
    std::vector<VertexId> ch(net.children(v).begin(), net.children(v).end());
    std::sort(ch.begin(), ch.end(), [&](VertexId a, VertexId b) {
      if (min_label[a] != min_label[b]) return min_label[a] < min_label[b];
      if (leaf_count[a] != leaf_count[b]) return leaf_count[a] < leaf_count[b];
      return a < b;
    });
    if (!ch.empty()) {
      out += '(';
      for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i) out += ',';
        emit(ch[i]);
      }
      out += ')';
    } else if (auto l = net.label(v)) {
      out += *l;
    }
    if (hyb) out += "#H" + std::to_string(tag[v]);
  };
  emit(*net.root());
  out += ";\n";
  return out;
}

UndirectedNet parse_newick_tree(std::string_view text) {
  auto nodes = NewickParser(text).parse();
  UndirectedNet net;
  std::vector<VertexId> vid(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const PNode& p = nodes[i];
    if (!p.hybrid.empty()) throw SyntaxError(p.line, p.col, "hybrid tags are not allowed in a tree");
    vid[i] = net.add_vertex();
    if (!p.label.empty()) net.set_label(vid[i], p.label);
    if (p.parenthesized) {
      std::size_t k = p.children.size();
      bool top = i == 0;
      bool ok = top ? (k == 2 || k == 3) : k == 2;
      if (!ok)
        throw NotBinary(std::to_string(p.line) + ":" + std::to_string(p.col) + ": node with " +
                        std::to_string(k) + " children");
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int c : nodes[i].children) net.add_edge(vid[i], vid[c]);
  if (nodes[0].parenthesized && nodes[0].children.size() == 2) inplace::suppress(net, vid[0]);
  auto report = validate_unrooted(net);
  if (!report.ok()) throw ValidationError(std::move(report));
  return net;
}

std::string serialize_newick_tree(const UndirectedNet& tree) {
  if (reticulation_number(tree) != 0 || components(tree).size() != 1)
    throw NotATree("network is not a tree");
  auto labels = tree.labeled_vertices();
  if (labels.empty()) throw NotATree("tree has no leaves");
  std::sort(labels.begin(), labels.end(), [](auto& a, auto& b) { return a.second < b.second; });
  VertexId x0 = labels.front().first;
  if (tree.vertex_count() == 1) return labels.front().second + ";\n";
  VertexId hub = tree.neighbors(x0)[0];
  if (tree.is_leaf(hub)) {
    return "(" + labels.front().second + "," + std::string(*tree.label(hub)) + ");\n";
  }
  std::map<std::pair<VertexId, VertexId>, std::string> min_memo;
  std::function<std::string(VertexId, VertexId)> min_below = [&](VertexId v, VertexId from) {
    auto key = std::make_pair(v, from);
    if (auto it = min_memo.find(key); it != min_memo.end()) return it->second;
    std::string best;
    if (auto l = tree.label(v)) best = std::string(*l);
    for (VertexId w : tree.neighbors(v))
      if (w != from) {
        std::string m = min_below(w, v);
        if (best.empty() || m < best) best = m;
      }
    return min_memo[key] = best;
  };
  std::function<std::string(VertexId, VertexId)> emit = [&](VertexId v, VertexId from) -> std::string {
    if (auto l = tree.label(v)) return std::string(*l);
    std::vector<VertexId> ch;
    for (VertexId w : tree.neighbors(v))
      if (w != from) ch.push_back(w);
    std::sort(ch.begin(), ch.end(), [&](VertexId a, VertexId b) { return min_below(a, v) < min_below(b, v); });
    std::string s = "(";
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (i) s += ',';
      s += emit(ch[i], v);
    }
    return s + ")";
  };
  std::string body = emit(hub, x0);
  return "(" + labels.front().second + "," + body.substr(1) + ";\n";
}

// ---------------------------------------------------------------- DIMACS

CnfInstance parse_dimacs_cnf(std::string_view text) {
  int n = -1, m = -1;
  int header_line = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> current;
  int clause_line = 0, clause_col = 0;
  int lineno = 0;
  auto finish = [&](int line, int col) {
    if (current.size() != 3)
      throw ClauseArityError(std::to_string(line) + ":" + std::to_string(col) + ": clause " +
                             std::to_string(clauses.size() + 1) + " has " + std::to_string(current.size()) +
                             " literals, expected 3");
    clauses.push_back(Clause{current[0], current[1], current[2]});
    current.clear();
  };
  for (std::string_view l : lines_of(text)) {
    ++lineno;
    auto toks = split_tokens(l);
    if (toks.empty()) continue;
    if (toks[0].text == "c" || toks[0].text.front() == 'c') continue;
    if (toks[0].text == "%") break;
    if (toks[0].text == "p") {
      if (n >= 0) throw SyntaxError(lineno, toks[0].col, "second problem line");
      if (toks.size() != 4 || toks[1].text != "cnf")
        throw SyntaxError(lineno, toks[0].col, "expected 'p cnf <vars> <clauses>'");
      auto num = [&](const Token& t) {
        int v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || p != t.text.data() + t.text.size() || v < 0)
          throw SyntaxError(lineno, t.col, "expected a non-negative integer, got '" + t.text + "'");
        return v;
      };
      n = num(toks[2]);
      m = num(toks[3]);
      header_line = lineno;
      continue;
    }
    if (n < 0) throw SyntaxError(lineno, toks[0].col, "clause before 'p cnf' header");
    for (const Token& t : toks) {
      int x = 0;
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), x);
      if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw SyntaxError(lineno, t.col, "expected a literal, got '" + t.text + "'");
      if (x == 0) {
        finish(clause_line, clause_col);
        continue;
      }
      if (current.empty()) {
        clause_line = lineno;
        clause_col = t.col;
      }
      if ((x < 0 ? -x : x) > n)
        throw SyntaxError(lineno, t.col, "variable " + std::to_string(x < 0 ? -x : x) + " exceeds declared count " + std::to_string(n));
      current.push_back(Literal::from_dimacs(x));
    }
  }
  if (n < 0) throw SyntaxError(lineno == 0 ? 1 : lineno, 1, "missing 'p cnf' header");
  if (!current.empty()) finish(clause_line, clause_col);
  if (static_cast<int>(clauses.size()) != m)
    throw SyntaxError(header_line, 1, "header declares " + std::to_string(m) + " clauses, found " +
                                          std::to_string(clauses.size()));
  return CnfInstance(n, std::move(clauses));
}

std::string serialize_dimacs_cnf(const CnfInstance& cnf) {
  std::ostringstream os;
  os << "p cnf " << cnf.n() << ' ' << cnf.m() << '\n';
  for (const Clause& c : cnf.clauses()) os << c[0].dimacs() << ' ' << c[1].dimacs() << ' ' << c[2].dimacs() << " 0\n";
  return os.str();
}

UndirectedNet parse_unrooted(std::string_view text) {
  for (std::string_view l : lines_of(text)) {
    auto toks = split_tokens(l.substr(0, l.find('#')));
    if (toks.empty()) continue;
    if (toks[0].text == "UPN/1") return parse_upn(text);
    break;
  }
  return parse_newick_tree(text);
}

}  // namespace tcnet
