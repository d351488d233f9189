#include "kago/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kago {

QBF parse_qdimacs(const std::string& text) {
  QBF f;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  int declared_clauses = -1;
  bool prefix_done = false;
  std::set<int> quantified;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank
    if (tok == "c") continue;    // comment
    if (tok == "p") {
      std::string kind;
      if (!(ls >> kind >> f.num_vars >> declared_clauses) || kind != "cnf")
        throw ParseError("bad problem line, expected 'p cnf V C'", line_no);
      if (f.num_vars < 0 || declared_clauses < 0)
        throw ParseError("negative counts in problem line", line_no);
      header_seen = true;
      continue;
    }
    if (!header_seen)
      throw ParseError("clause or prefix before 'p cnf' line", line_no);
    if (tok == "e" || tok == "a") {
      if (prefix_done)
        throw ParseError("quantifier block after first clause", line_no);
      Quantifier q = tok == "e" ? Quantifier::Exists : Quantifier::Forall;
      int v;
      bool terminated = false;
      while (ls >> v) {
        if (v == 0) { terminated = true; break; }
        if (v < 0 || v > f.num_vars)
          throw ParseError("quantified variable out of range", line_no);
        if (!quantified.insert(v).second)
          throw ParseError("variable quantified twice", line_no);
        f.prefix.push_back({q, v});
      }
      if (!terminated)
        throw ParseError("quantifier line not terminated by 0", line_no);
      continue;
    }
    // Clause line; first token already read.
    prefix_done = true;
    std::vector<int> clause;
    int lit;
    {
      std::istringstream first(tok);
      if (!(first >> lit))
        throw ParseError("bad literal '" + tok + "'", line_no);
    }
    bool terminated = false;
    while (true) {
      if (lit == 0) { terminated = true; break; }
      int v = std::abs(lit);
      if (v > f.num_vars)
        throw ParseError("literal variable out of range", line_no);
      if (!quantified.count(v))
        throw ParseError("clause references unquantified variable", line_no);
      clause.push_back(lit);
      if (!(ls >> lit)) break;
    }
    if (!terminated)
      throw ParseError("clause not terminated by 0", line_no);
    if (clause.empty())
      throw ParseError("empty clause", line_no);
    f.clauses.push_back(std::move(clause));
  }
  if (!header_seen) throw ParseError("missing 'p cnf' line", line_no ? line_no : 1);
  if (declared_clauses >= 0 && static_cast<int>(f.clauses.size()) != declared_clauses)
    throw ParseError("clause count differs from problem line", line_no);
  return f;
}

std::string qbf_to_qdimacs(const QBF& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  size_t i = 0;
  while (i < f.prefix.size()) {
    Quantifier q = f.prefix[i].q;
    out << (q == Quantifier::Exists ? 'e' : 'a');
    while (i < f.prefix.size() && f.prefix[i].q == q) out << ' ' << f.prefix[i++].var;
    out << " 0\n";
  }
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

bool eval_matrix(const QBF& f, uint32_t assignment) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      int v = std::abs(lit);
      bool val = (assignment >> (v - 1)) & 1;
      if (lit < 0) val = !val;
      if (val) { sat = true; break; }
    }
    if (!sat) return false;
  }
  return true;
}

bool eval_prefix(const QBF& f, size_t i, uint32_t assignment) {
  if (i == f.prefix.size()) return eval_matrix(f, assignment);
  int v = f.prefix[i].var;
  uint32_t with = assignment | (1u << (v - 1));
  uint32_t without = assignment & ~(1u << (v - 1));
  bool a = eval_prefix(f, i + 1, without);
  bool b = eval_prefix(f, i + 1, with);
  return f.prefix[i].q == Quantifier::Exists ? (a || b) : (a && b);
}

}  // namespace

bool eval_qbf(const QBF& f) {
  std::set<int> quantified;
  for (const auto& qv : f.prefix) quantified.insert(qv.var);
  for (const auto& c : f.clauses)
    for (int lit : c)
      if (!quantified.count(std::abs(lit)))
        throw std::invalid_argument("eval_qbf: formula is not closed");
  if (f.prefix.size() > 28)
    throw std::invalid_argument("eval_qbf: prefix too long for brute force");
  return eval_prefix(f, 0, 0);
}

PositiveFormula parse_positive_formula(const std::string& text) {
  PositiveFormula f;
  size_t i = 0;
  int line = 1;
  auto col = [&] { return static_cast<int>(i) + 1; };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      if (text[i] == '\n') ++line;
      ++i;
    }
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '('", line, col());
    ++i;
    std::vector<int> clause;
    while (true) {
      skip_ws();
      if (i >= text.size() || text[i] != 'x')
        throw ParseError("expected literal 'xN'", line, col());
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected variable number", line, col());
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > 31) throw ParseError("variable id out of range", line, col());
      clause.push_back(v);
      f.num_vars = std::max(f.num_vars, v);
      skip_ws();
      if (i < text.size() && text[i] == '|') { ++i; continue; }
      break;
    }
    if (i >= text.size() || text[i] != ')')
      throw ParseError("expected ')'", line, col());
    ++i;
    f.clauses.push_back(std::move(clause));
    skip_ws();
    if (i < text.size()) {
      if (text[i] != '&') throw ParseError("expected '&'", line, col());
      ++i;
      skip_ws();
    }
  }
  return f;
}

std::string positive_formula_to_text(const PositiveFormula& f) {
  std::ostringstream out;
  for (size_t c = 0; c < f.clauses.size(); ++c) {
    if (c) out << '&';
    out << '(';
    for (size_t j = 0; j < f.clauses[c].size(); ++j) {
      if (j) out << '|';
      out << 'x' << f.clauses[c][j];
    }
    out << ')';
  }
  return out.str();
}

bool eval_positive(const PositiveFormula& f, uint32_t assignment) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int v : clause)
      if ((assignment >> (v - 1)) & 1) { sat = true; break; }
    if (!sat) return false;
  }
  return true;
}

std::vector<int> fg_legal_moves(const PositiveFormula& f, const FormulaGameState& s) {
  std::vector<int> moves;
  for (int v = 1; v <= f.num_vars; ++v) {
    bool val = (s.assignment >> (v - 1)) & 1;
    bool want = s.to_move == Color::White;  // White flips false->true
    if (val != want && v != s.last_changed) moves.push_back(v);
  }
  return moves;
}

FormulaGameState fg_apply(const PositiveFormula& f, const FormulaGameState& s,
                          int var, StuckPolicy policy) {
  FormulaGameState next = s;
  next.to_move = opponent(s.to_move);
  if (var == 0) {
    if (!fg_legal_moves(f, s).empty())
      throw std::invalid_argument("fg_apply: pass while moves available");
    if (policy == StuckPolicy::ClearLastChanged) next.last_changed = 0;
    return next;
  }
  auto legal = fg_legal_moves(f, s);
  if (std::find(legal.begin(), legal.end(), var) == legal.end())
    throw std::invalid_argument("fg_apply: illegal formula move");
  next.assignment = s.assignment ^ (1u << (var - 1));
  next.last_changed = var;
  return next;
}

GameValue solve_formula_game(const PositiveFormula& f, const FormulaGameState& initial,
                             StuckPolicy policy) {
  if (f.num_vars > 14)
    throw std::invalid_argument("solve_formula_game: too many variables");
  int n = f.num_vars;
  size_t num_assign = 1ull << n;
  size_t num_states = num_assign * 2 * (n + 1);
  auto index = [&](const FormulaGameState& s) {
    size_t side = s.to_move == Color::White ? 0 : 1;
    return (static_cast<size_t>(s.assignment) * 2 + side) * (n + 1) + s.last_changed;
  };
  auto state_of = [&](size_t idx) {
    FormulaGameState s;
    s.last_changed = static_cast<int>(idx % (n + 1));
    idx /= (n + 1);
    s.to_move = (idx % 2) == 0 ? Color::White : Color::Black;
    s.assignment = static_cast<uint32_t>(idx / 2);
    return s;
  };

  // White-win attractor, seeded with (White to move, formula true).
  std::vector<char> win(num_states, 0);
  for (size_t a = 0; a < num_assign; ++a) {
    if (!eval_positive(f, static_cast<uint32_t>(a))) continue;
    for (int lc = 0; lc <= n; ++lc) {
      FormulaGameState s;
      s.assignment = static_cast<uint32_t>(a);
      s.to_move = Color::White;
      s.last_changed = lc;
      win[index(s)] = 1;
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t idx = 0; idx < num_states; ++idx) {
      if (win[idx]) continue;
      FormulaGameState s = state_of(idx);
      auto moves = fg_legal_moves(f, s);
      bool white = s.to_move == Color::White;
      bool value;
      if (moves.empty()) {
        value = win[index(fg_apply(f, s, 0, policy))];
      } else if (white) {
        value = false;
        for (int v : moves)
          if (win[index(fg_apply(f, s, v, policy))]) { value = true; break; }
      } else {
        value = true;
        for (int v : moves)
          if (!win[index(fg_apply(f, s, v, policy))]) { value = false; break; }
      }
      if (value) {
        win[idx] = 1;
        changed = true;
      }
    }
  }
  return win[index(initial)] ? GameValue::WhiteWins : GameValue::BlackWins;
}

}  // namespace kago
