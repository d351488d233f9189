#include <doctest.h>

#include <random>

#include "kago/boardtext.hpp"
#include "kago/life.hpp"

using namespace kago;

namespace {

GameState from(const std::string& text) { return board_from_text(text); }

}  // namespace

TEST_CASE("two one-point eyes are pass-alive") {
  // White group along the top edge with eyes at (1,0) and (3,0).
  GameState s = from(
      "5 3 B chinese\n"
      "O . O . O\n"
      "O O O O O\n"
      ". . . . .\n");
  auto alive = benson_alive(s.board(), Color::White);
  REQUIRE(alive.size() == 1);
  CHECK(alive[0].stones.size() == 8);
  CHECK(terminal_status(s) == TerminalStatus::WhiteWin);
}

TEST_CASE("one eye is not enough") {
  // Single eye at (1,0); the outside region has empties out of contact with
  // the chain (row 3), so it is not vital. One vital region: dead.
  GameState s = from(
      "5 4 B chinese\n"
      "O . O O O\n"
      "O O O O O\n"
      ". . . . .\n"
      ". . . . .\n");
  CHECK(benson_alive(s.board(), Color::White).empty());
  CHECK(terminal_status(s) == TerminalStatus::Ongoing);
}

TEST_CASE("false connection point does not make two groups one eye each alive") {
  // Two one-eyed chains separated by a black wedge at (3,0): the shared
  // cavity at (3,1) leaks into the open rows below, so neither chain gets a
  // second vital region.
  GameState f = from(
      "7 4 B chinese\n"
      "O . O X O . O\n"
      "O O O . O O O\n"
      ". . . . . . .\n"
      ". . . . . . .\n");
  CHECK(benson_alive(f.board(), Color::White).empty());

  // Sealing the cavity from below joins everything into one chain whose
  // wedge cavity becomes a third vital region: alive.
  GameState g = from(
      "7 3 B chinese\n"
      "O . O X O . O\n"
      "O O O . O O O\n"
      "O O O O O O O\n");
  CHECK(benson_alive(g.board(), Color::White).size() == 1);
}

TEST_CASE("terminal status basics") {
  GameState none_white = from("3 3 B chinese\n. X .\n. . .\n. . X\n");
  CHECK(terminal_status(none_white) == TerminalStatus::BlackWin);

  GameState ongoing = from("3 3 B chinese\n. X .\n. O .\n. . .\n");
  CHECK(terminal_status(ongoing) == TerminalStatus::Ongoing);
}

TEST_CASE("double pass adjudicates by pass-aliveness") {
  GameState s = from("3 3 B japanese\n. X .\n. O .\n. . .\n");
  GameState t = *s.play(Move::pass()).state;
  GameState u = *t.play(Move::pass()).state;
  // double pass repeats the position, but adjudication precedes NoResult
  CHECK(terminal_status(u) == TerminalStatus::BlackWin);

  GameState alive = from(
      "5 3 W japanese\n"
      "O . O . O\n"
      "O O O O O\n"
      ". . . . .\n");
  GameState a2 = *alive.play(Move::pass()).state;
  GameState a3 = *a2.play(Move::pass()).state;
  CHECK(terminal_status(a3) == TerminalStatus::WhiteWin);
}

TEST_CASE("Japanese triple-ko script reaches NoResult") {
  GameState s = from(
      "11 3 W japanese\n"
      ". X O . O X . . X O .\n"
      "X . X O . O X X . X O\n"
      ". X O . O X . . X O .\n");
  const std::pair<int, int> cycle[6] = {{1, 1}, {4, 1}, {8, 1}, {2, 1}, {5, 1}, {9, 1}};
  for (auto [c, r] : cycle) {
    PlayResult pr = s.play(Move::point(c, r));
    REQUIRE(pr.ok());
    s = *pr.state;
  }
  CHECK(terminal_status(s) == TerminalStatus::NoResult);
}

TEST_CASE("BlackWin is monotone: no continuation changes it") {
  GameState s = from("3 3 W chinese\n. X .\nX . .\n. . X\n");
  REQUIRE(terminal_status(s) == TerminalStatus::BlackWin);
  // White plays on; status stays BlackWin only if White stays off the board —
  // the claim is about the zero-White-stone predicate itself: replaying any
  // move sequence that keeps White stoneless keeps the status.
  GameState t = *s.play(Move::pass()).state;
  CHECK(terminal_status(*t.play(Move::point(0, 0)).state) == TerminalStatus::BlackWin);
}

namespace {

// Exhaustive capture oracle: can the attacker (to_move) remove every stone of
// `defender` within `max_plies`, with the defender restricted to passing?
// Used to cross-check benson_alive: pass-alive groups survive even eternal
// passing by the owner.
bool attacker_can_capture_all(const GameState& s, Color defender, int max_plies) {
  if (s.board().stone_count(defender) == 0) return true;
  if (max_plies <= 0) return false;
  if (s.to_move() == defender) {
    PlayResult pr = s.play(Move::pass());
    return attacker_can_capture_all(*pr.state, defender, max_plies - 1);
  }
  for (Move m : s.legal_moves()) {
    if (m.is_pass()) continue;
    PlayResult pr = s.play(m);
    if (!pr.ok()) continue;
    if (attacker_can_capture_all(*pr.state, defender, max_plies - 1)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("benson groups survive a passing owner; non-benson 4x4 groups fall") {
  // pass-alive: survives unlimited attack
  GameState alive = from(
      "5 3 B chinese\n"
      "O . O . O\n"
      "O O O O O\n"
      ". . . . .\n");
  // The one-eyed version is capturable with the owner passing.
  GameState dead = from(
      "4 2 B chinese\n"
      "O . O O\n"
      "O O O O\n");
  GameState attack(dead.board(), Color::Black, Ruleset::Chinese);
  CHECK(attacker_can_capture_all(attack, Color::White, 6));
  GameState hold(alive.board(), Color::Black, Ruleset::Chinese);
  CHECK(!attacker_can_capture_all(hold, Color::White, 8));
}
