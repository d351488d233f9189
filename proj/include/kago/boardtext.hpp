#pragma once

#include <stdexcept>
#include <string>

#include "kago/board.hpp"

namespace kago {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(std::string msg, int line_, int column_ = 0)
      : std::runtime_error(std::move(msg)), line(line_), column(column_) {}
};

// Plain-text board format used by all fixtures:
//   header line:  "W H to_move ruleset"   e.g. "5 5 B chinese"
//   then H rows of W characters from {. X O}; spaces between cells allowed.
std::string board_to_text(const GameState& s);
GameState board_from_text(const std::string& text);

// Same grid plus coordinate rulers; for human eyes and the CLI.
std::string render_ascii(const GameState& s);

}  // namespace kago
