#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kago/board.hpp"     // Color
#include "kago/boardtext.hpp" // ParseError

namespace kago {

enum class Quantifier : uint8_t { Exists, Forall };

struct QuantifiedVar {
  Quantifier q;
  int var;  // 1-based
};

// Prenex CNF quantified Boolean formula. Variables are 1-based; literals are
// signed ints (-v = negated v).
struct QBF {
  int num_vars = 0;
  std::vector<QuantifiedVar> prefix;
  std::vector<std::vector<int>> clauses;
};

QBF parse_qdimacs(const std::string& text);
std::string qbf_to_qdimacs(const QBF& f);

// Truth value by recursive expansion over the prefix. Requires a closed
// formula (every variable quantified).
bool eval_qbf(const QBF& f);

// CNF over positive literals only.
struct PositiveFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // positive 1-based variable ids
};

// One-line format: (x1|x2|x3)&(x2|x3|x4). Blank text = zero clauses.
PositiveFormula parse_positive_formula(const std::string& text);
std::string positive_formula_to_text(const PositiveFormula& f);

bool eval_positive(const PositiveFormula& f, uint32_t assignment);

// Robson's formula game. White sets variables true, Black sets them false,
// neither may immediately revert the opponent's last change. White wins when
// the formula is true at the start of his turn; Black wins by playing
// forever. A player with no legal change passes; whether the pass clears the
// no-revert constraint is configurable.
struct FormulaGameState {
  uint32_t assignment = 0;       // bit v-1 = variable v
  Color to_move = Color::White;
  int last_changed = 0;          // 0 = none

  bool operator==(const FormulaGameState&) const = default;
};

enum class StuckPolicy : uint8_t { ClearLastChanged, KeepLastChanged };

enum class GameValue : uint8_t { WhiteWins, BlackWins };

// Variables the side to move may flip (White: currently-false vars; Black:
// currently-true vars; minus last_changed).
std::vector<int> fg_legal_moves(const PositiveFormula& f, const FormulaGameState& s);

// var > 0 flips that variable; var == 0 is a pass (legal only when stuck).
// Throws std::invalid_argument on an illegal move.
FormulaGameState fg_apply(const PositiveFormula& f, const FormulaGameState& s,
                          int var, StuckPolicy policy = StuckPolicy::ClearLastChanged);

// Exact value by least-fixpoint retrograde attractor computation over the
// (assignment, side, last_changed) state graph. Throws on num_vars > 14.
GameValue solve_formula_game(const PositiveFormula& f, const FormulaGameState& initial,
                             StuckPolicy policy = StuckPolicy::ClearLastChanged);

}  // namespace kago
