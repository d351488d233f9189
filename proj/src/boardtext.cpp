#include "kago/boardtext.hpp"

#include <sstream>

namespace kago {

std::string board_to_text(const GameState& s) {
  const Board& b = s.board();
  std::ostringstream out;
  out << b.width() << ' ' << b.height() << ' '
      << (s.to_move() == Color::Black ? 'B' : 'W') << ' '
      << (s.ruleset() == Ruleset::Chinese ? "chinese" : "japanese") << '\n';
  for (int r = 0; r < b.height(); ++r) {
    for (int c = 0; c < b.width(); ++c) {
      if (c) out << ' ';
      out << cell_char(b.at(Coord(c, r)));
    }
    out << '\n';
  }
  return out.str();
}

GameState board_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty board text", 1);
  std::istringstream hs(header);
  int w = 0, h = 0;
  std::string side, rules;
  if (!(hs >> w >> h >> side >> rules))
    throw ParseError("bad header, expected 'W H to_move ruleset'", 1);
  if (w <= 0 || h <= 0) throw ParseError("bad board size", 1);
  Color to_move;
  if (side == "B" || side == "b") to_move = Color::Black;
  else if (side == "W" || side == "w") to_move = Color::White;
  else throw ParseError("bad to_move '" + side + "'", 1);
  Ruleset rs;
  if (rules == "chinese") rs = Ruleset::Chinese;
  else if (rules == "japanese") rs = Ruleset::Japanese;
  else throw ParseError("bad ruleset '" + rules + "'", 1);

  Board board(w, h);
  for (int r = 0; r < h; ++r) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing board row", r + 2);
    int c = 0;
    for (size_t i = 0; i < line.size(); ++i) {
      char ch = line[i];
      if (ch == ' ' || ch == '\t' || ch == '\r') continue;
      if (c >= w)
        throw ParseError("row too long", r + 2, static_cast<int>(i) + 1);
      switch (ch) {
        case '.': break;
        case 'X': board.set(Coord(c, r), Cell::Black); break;
        case 'O': board.set(Coord(c, r), Cell::White); break;
        default:
          throw ParseError(std::string("bad cell character '") + ch + "'",
                           r + 2, static_cast<int>(i) + 1);
      }
      ++c;
    }
    if (c != w) throw ParseError("row too short", r + 2);
  }
  return GameState(std::move(board), to_move, rs);
}

std::string render_ascii(const GameState& s) {
  const Board& b = s.board();
  std::ostringstream grid;
  grid << "   ";
  for (int c = 0; c < b.width(); ++c) grid << (c % 10) << ' ';
  grid << '\n';
  for (int r = 0; r < b.height(); ++r) {
    grid << (r < 10 ? " " : "") << r << ' ';
    for (int c = 0; c < b.width(); ++c)
      grid << cell_char(b.at(Coord(c, r))) << ' ';
    grid << '\n';
  }
  return grid.str();
}

}  // namespace kago
