#include <doctest.h>

#include <random>

#include "kago/boardtext.hpp"
#include "kago/sgf.hpp"

using namespace kago;

TEST_CASE("minimal sgf for an empty 9x9, Black to move") {
  GameState s(Board(9, 9), Color::Black, Ruleset::Chinese);
  std::string sgf = to_sgf(s);
  CHECK(sgf.find("SZ[9]") != std::string::npos);
  CHECK(sgf.find("PL[B]") != std::string::npos);
  GameState t = from_sgf(sgf);
  CHECK(t.board() == s.board());
  CHECK(t.to_move() == s.to_move());
  CHECK(t.ruleset() == s.ruleset());
}

TEST_CASE("sgf round trip over random positions") {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 100; ++iter) {
    int w = 3 + static_cast<int>(rng() % 10);
    int h = 3 + static_cast<int>(rng() % 10);
    Ruleset rules = iter % 2 ? Ruleset::Japanese : Ruleset::Chinese;
    GameState s(Board(w, h), iter % 3 ? Color::White : Color::Black, rules);
    int stones = static_cast<int>(rng() % (w * h / 2 + 1));
    for (int i = 0; i < stones; ++i) {
      auto moves = s.legal_moves();
      if (moves.size() > 1) moves.pop_back();
      s = *s.play(moves[rng() % moves.size()]).state;
    }
    GameState t = from_sgf(to_sgf(s));
    REQUIRE(t.board() == s.board());
    REQUIRE(t.to_move() == s.to_move());
    REQUIRE(t.ruleset() == s.ruleset());
    // plain-text round trip as well
    GameState u = board_from_text(board_to_text(s));
    REQUIRE(u.board() == s.board());
    REQUIRE(u.to_move() == s.to_move());
  }
}

TEST_CASE("sgf with a move sequence replays through the rules") {
  GameState s = from_sgf("(;FF[4]GM[1]SZ[3]PL[B];B[aa];W[bb];B[])");
  CHECK(s.board().at(Coord(0, 0)) == Cell::Black);
  CHECK(s.board().at(Coord(1, 1)) == Cell::White);
  CHECK(s.to_move() == Color::White);
  CHECK(s.consecutive_passes() == 1);
}

TEST_CASE("sgf errors carry a node index") {
  CHECK_THROWS_AS(from_sgf("(;SZ[3];B[zz])"), ParseError);
  CHECK_THROWS_AS(from_sgf("not sgf"), ParseError);
  CHECK_THROWS_AS(from_sgf("(;SZ[3];B[aa];B[bb])"), ParseError);  // out of turn
  // oversized board refuses SGF export
  GameState big(Board(60, 60), Color::Black, Ruleset::Chinese);
  CHECK_THROWS_AS(to_sgf(big), BoardTooLarge);
}

TEST_CASE("comments survive and carry metadata") {
  GameState s(Board(5, 5), Color::White, Ruleset::Japanese);
  std::string sgf = to_sgf(s, "census: pipe=3 ]escaped]");
  CHECK(sgf_root_comment(sgf) == "census: pipe=3 ]escaped]");
}
