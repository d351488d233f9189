#include "kago/sgf.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace kago {

namespace {

char coord_letter(int v) {
  return v < 26 ? static_cast<char>('a' + v) : static_cast<char>('A' + v - 26);
}

int letter_coord(char c, int node, bool& ok) {
  ok = true;
  if (c >= 'a' && c <= 'z') return c - 'a';
  if (c >= 'A' && c <= 'Z') return c - 'A' + 26;
  ok = false;
  (void)node;
  return -1;
}

std::string escape_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == ']' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

struct SgfNode {
  std::vector<std::pair<std::string, std::vector<std::string>>> props;

  const std::vector<std::string>* find(const std::string& key) const {
    for (const auto& p : props)
      if (p.first == key) return &p.second;
    return nullptr;
  }
};

std::vector<SgfNode> parse_nodes(const std::string& text) {
  std::vector<SgfNode> nodes;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '(')
    throw ParseError("sgf: expected '('", 0);
  ++i;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) throw ParseError("sgf: unterminated gametree", static_cast<int>(nodes.size()));
    char c = text[i];
    if (c == ')') break;
    if (c == '(') {  // variations: follow only the main line
      ++i;
      continue;
    }
    if (c != ';') throw ParseError("sgf: expected ';'", static_cast<int>(nodes.size()));
    ++i;
    SgfNode node;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("sgf: unterminated node", static_cast<int>(nodes.size()));
      if (text[i] == ';' || text[i] == ')' || text[i] == '(') break;
      std::string key;
      while (i < text.size() && std::isupper(static_cast<unsigned char>(text[i])))
        key.push_back(text[i++]);
      if (key.empty())
        throw ParseError("sgf: bad property name", static_cast<int>(nodes.size()));
      std::vector<std::string> values;
      skip_ws();
      while (i < text.size() && text[i] == '[') {
        ++i;
        std::string val;
        while (i < text.size() && text[i] != ']') {
          if (text[i] == '\\' && i + 1 < text.size()) ++i;
          val.push_back(text[i++]);
        }
        if (i >= text.size()) throw ParseError("sgf: unterminated value", static_cast<int>(nodes.size()));
        ++i;  // ']'
        values.push_back(std::move(val));
        skip_ws();
      }
      if (values.empty())
        throw ParseError("sgf: property without value", static_cast<int>(nodes.size()));
      node.props.emplace_back(std::move(key), std::move(values));
    }
    nodes.push_back(std::move(node));
  }
  if (nodes.empty()) throw ParseError("sgf: no nodes", 0);
  return nodes;
}

}  // namespace

std::string to_sgf(const GameState& s, const std::string& comment) {
  const Board& b = s.board();
  if (b.width() > 52 || b.height() > 52)
    throw BoardTooLarge("board exceeds SGF coordinate range");
  std::ostringstream out;
  out << "(;FF[4]GM[1]";
  if (b.width() == b.height()) out << "SZ[" << b.width() << "]";
  else out << "SZ[" << b.width() << ':' << b.height() << "]";
  out << "RU[" << (s.ruleset() == Ruleset::Chinese ? "Chinese" : "Japanese") << "]";
  std::ostringstream ab, aw;
  for (int r = 0; r < b.height(); ++r)
    for (int c = 0; c < b.width(); ++c) {
      Cell v = b.at(Coord(c, r));
      if (v == Cell::Empty) continue;
      (v == Cell::Black ? ab : aw)
          << '[' << coord_letter(c) << coord_letter(r) << ']';
    }
  if (!ab.str().empty()) out << "AB" << ab.str();
  if (!aw.str().empty()) out << "AW" << aw.str();
  out << "PL[" << (s.to_move() == Color::Black ? 'B' : 'W') << "]";
  if (!comment.empty()) out << "C[" << escape_text(comment) << "]";
  out << ")\n";
  return out.str();
}

GameState from_sgf(const std::string& text) {
  auto nodes = parse_nodes(text);
  const SgfNode& root = nodes[0];

  int w = 19, h = 19;
  if (const auto* sz = root.find("SZ")) {
    const std::string& v = (*sz)[0];
    size_t colon = v.find(':');
    try {
      if (colon == std::string::npos) {
        w = h = std::stoi(v);
      } else {
        w = std::stoi(v.substr(0, colon));
        h = std::stoi(v.substr(colon + 1));
      }
    } catch (const std::exception&) {
      throw ParseError("sgf: bad SZ", 0);
    }
  }
  if (w <= 0 || h <= 0 || w > 52 || h > 52) throw ParseError("sgf: bad SZ", 0);

  Ruleset rules = Ruleset::Chinese;
  if (const auto* ru = root.find("RU")) {
    std::string v = (*ru)[0];
    for (auto& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (v == "japanese") rules = Ruleset::Japanese;
    else if (v == "chinese") rules = Ruleset::Chinese;
    else throw ParseError("sgf: unsupported RU", 0);
  }

  Board board(w, h);
  auto add_stones = [&](const std::vector<std::string>& vals, Cell color, int node) {
    for (const std::string& v : vals) {
      if (v.size() != 2) throw ParseError("sgf: bad coordinate", node);
      bool ok1, ok2;
      int c = letter_coord(v[0], node, ok1);
      int r = letter_coord(v[1], node, ok2);
      if (!ok1 || !ok2 || c >= w || r >= h)
        throw ParseError("sgf: coordinate out of range", node);
      board.set(Coord(c, r), color);
    }
  };
  if (const auto* abp = root.find("AB")) add_stones(*abp, Cell::Black, 0);
  if (const auto* awp = root.find("AW")) add_stones(*awp, Cell::White, 0);

  Color to_move = Color::Black;
  if (const auto* pl = root.find("PL")) {
    if ((*pl)[0] == "B" || (*pl)[0] == "b") to_move = Color::Black;
    else if ((*pl)[0] == "W" || (*pl)[0] == "w") to_move = Color::White;
    else throw ParseError("sgf: bad PL", 0);
  }

  GameState state(std::move(board), to_move, rules);

  for (size_t n = 1; n < nodes.size(); ++n) {
    for (char side : {'B', 'W'}) {
      const auto* mv = nodes[n].find(std::string(1, side));
      if (!mv) continue;
      Color color = side == 'B' ? Color::Black : Color::White;
      if (state.to_move() != color)
        throw ParseError("sgf: move out of turn", static_cast<int>(n));
      const std::string& v = (*mv)[0];
      Move m = Move::pass();
      if (!v.empty() && !(v == "tt" && w <= 19 && h <= 19)) {
        if (v.size() != 2) throw ParseError("sgf: bad move", static_cast<int>(n));
        bool ok1, ok2;
        int c = letter_coord(v[0], static_cast<int>(n), ok1);
        int r = letter_coord(v[1], static_cast<int>(n), ok2);
        if (!ok1 || !ok2 || c >= w || r >= h)
          throw ParseError("sgf: move out of range", static_cast<int>(n));
        m = Move::point(c, r);
      }
      PlayResult pr = state.play(m);
      if (!pr.ok())
        throw ParseError(std::string("sgf: illegal move (") + play_error_name(pr.error) + ")",
                         static_cast<int>(n));
      state = std::move(*pr.state);
    }
  }
  return state;
}

std::string sgf_root_comment(const std::string& text) {
  auto nodes = parse_nodes(text);
  if (const auto* c = nodes[0].find("C")) return (*c)[0];
  return {};
}

}  // namespace kago
