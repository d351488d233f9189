#pragma once

#include <string>

#include "kago/board.hpp"
#include "kago/boardtext.hpp"

namespace kago {

struct BoardTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// SGF FF[4] with setup stones (AB/AW), PL, RU and optional comment. Boards
// beyond the 52-letter coordinate range raise BoardTooLarge; callers fall
// back to the plain-text board format.
std::string to_sgf(const GameState& s, const std::string& comment = {});

// Parses a single-gametree SGF: SZ/AB/AW/PL/RU plus any B[]/W[] move nodes,
// which are replayed through the rules kernel. ParseError carries the node
// index in `line`.
GameState from_sgf(const std::string& text);

// Comment of the root node, when present (gadget metadata rides here).
std::string sgf_root_comment(const std::string& text);

}  // namespace kago
