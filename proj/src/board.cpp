#include "kago/board.hpp"

#include <array>
#include <stdexcept>

namespace kago {

char cell_char(Cell c) {
  switch (c) {
    case Cell::Empty: return '.';
    case Cell::Black: return 'X';
    case Cell::White: return 'O';
  }
  return '?';
}

const char* play_error_name(PlayError e) {
  switch (e) {
    case PlayError::OutOfBounds: return "OutOfBounds";
    case PlayError::Occupied: return "IllegalOccupied";
    case PlayError::Suicide: return "IllegalSuicide";
    case PlayError::Ko: return "IllegalKo";
    case PlayError::Superko: return "IllegalSuperko";
  }
  return "?";
}

namespace {

constexpr int kMaxDim = 256;

uint64_t splitmix64(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct ZobristTable {
  std::vector<uint64_t> cells;  // [color][row*kMaxDim+col]
  std::vector<uint64_t> ko;
  uint64_t side_white;
  uint64_t one_pass;

  ZobristTable() {
    uint64_t seed = 0x6b6167'6f676f21ULL;  // fixed seed, deterministic
    cells.resize(2ull * kMaxDim * kMaxDim);
    for (auto& v : cells) v = splitmix64(seed);
    ko.resize(static_cast<size_t>(kMaxDim) * kMaxDim);
    for (auto& v : ko) v = splitmix64(seed);
    side_white = splitmix64(seed);
    one_pass = splitmix64(seed);
  }
};

const ZobristTable& ztable() {
  static const ZobristTable t;
  return t;
}

}  // namespace

uint64_t zobrist_cell(Coord c, Color color) {
  int color_idx = color == Color::Black ? 0 : 1;
  return ztable().cells[static_cast<size_t>(color_idx) * kMaxDim * kMaxDim +
                        static_cast<size_t>(c.row) * kMaxDim + c.col];
}

uint64_t zobrist_side_white() { return ztable().side_white; }

uint64_t zobrist_ko(Coord c) {
  return ztable().ko[static_cast<size_t>(c.row) * kMaxDim + c.col];
}

uint64_t zobrist_one_pass() { return ztable().one_pass; }

Board::Board(int width, int height) : width_(width), height_(height) {
  if (width <= 0 || height <= 0 || width > kMaxDim || height > kMaxDim)
    throw std::invalid_argument("board dimensions out of range");
  cells_.assign(static_cast<size_t>(width) * height, Cell::Empty);
}

void Board::set(Coord c, Cell v) {
  Cell& slot = cells_[index(c)];
  if (slot == v) return;
  if (slot != Cell::Empty) {
    stone_key_ ^= zobrist_cell(c, slot);
    (slot == Cell::Black ? black_count_ : white_count_)--;
  }
  slot = v;
  if (v != Cell::Empty) {
    stone_key_ ^= zobrist_cell(c, v);
    (v == Cell::Black ? black_count_ : white_count_)++;
  }
}

uint64_t Board::recompute_stone_key() const {
  uint64_t k = 0;
  for (int i = 0; i < cell_count(); ++i) {
    Cell v = cells_[i];
    if (v != Cell::Empty) k ^= zobrist_cell(coord(i), v);
  }
  return k;
}

namespace {

// Reusable flood-fill workspace; stamp-based marking avoids per-query clears.
struct FloodScratch {
  std::vector<uint32_t> mark;
  std::vector<int> queue;
  uint32_t stamp = 0;

  void prepare(int cells) {
    if (static_cast<int>(mark.size()) < cells) mark.assign(cells, 0);
    if (++stamp == 0) {
      std::fill(mark.begin(), mark.end(), 0);
      stamp = 1;
    }
    queue.clear();
  }
};

thread_local FloodScratch g_flood;
thread_local FloodScratch g_libs;

}  // namespace

Group group_at(const Board& b, Coord at) {
  if (!b.in_bounds(at)) throw std::invalid_argument("group_at: out of bounds");
  Cell color = b.at(at);
  if (color == Cell::Empty) throw std::invalid_argument("group_at: empty point");

  Group g;
  g.color = color;

  auto& fs = g_flood;
  auto& ls = g_libs;
  fs.prepare(b.cell_count());
  ls.prepare(b.cell_count());

  fs.queue.push_back(b.index(at));
  fs.mark[b.index(at)] = fs.stamp;
  while (!fs.queue.empty()) {
    int idx = fs.queue.back();
    fs.queue.pop_back();
    Coord c = b.coord(idx);
    g.stones.push_back(c);
    b.for_each_neighbor(c, [&](Coord n) {
      int ni = b.index(n);
      Cell v = b.at(n);
      if (v == color) {
        if (fs.mark[ni] != fs.stamp) {
          fs.mark[ni] = fs.stamp;
          fs.queue.push_back(ni);
        }
      } else if (v == Cell::Empty) {
        if (ls.mark[ni] != ls.stamp) {
          ls.mark[ni] = ls.stamp;
          g.liberties.push_back(n);
        }
      }
    });
  }
  return g;
}

std::vector<Coord> liberties(const Board& b, Coord at) {
  return group_at(b, at).liberties;
}

int liberty_count(const Board& b, Coord at) {
  return static_cast<int>(group_at(b, at).liberties.size());
}

PackedBoard PackedBoard::pack(const Board& b) {
  PackedBoard p;
  p.width = static_cast<int16_t>(b.width());
  p.height = static_cast<int16_t>(b.height());
  int n = b.cell_count();
  p.bits.assign((n + 3) / 4, 0);
  for (int i = 0; i < n; ++i) {
    uint8_t v = static_cast<uint8_t>(b.at(b.coord(i)));
    p.bits[i >> 2] |= static_cast<uint8_t>(v << ((i & 3) * 2));
  }
  return p;
}

bool PackedBoard::matches(const Board& b) const {
  if (width != b.width() || height != b.height()) return false;
  int n = b.cell_count();
  for (int i = 0; i < n; ++i) {
    uint8_t v = (bits[i >> 2] >> ((i & 3) * 2)) & 3;
    if (v != static_cast<uint8_t>(b.at(b.coord(i)))) return false;
  }
  return true;
}

GameState::GameState(Board board, Color to_move, Ruleset ruleset, SuperkoKind superko)
    : board_(std::move(board)),
      to_move_(to_move),
      ruleset_(ruleset),
      superko_(superko) {
  auto node = std::make_shared<HistNode>();
  node->index = 0;
  node->stone_key = board_.stone_key();
  node->to_move = to_move_;
  node->packed = PackedBoard::pack(board_);
  history_ = std::move(node);
}

int GameState::history_size() const {
  return history_ ? history_->index + 1 : 0;
}

void GameState::walk_history(
    const std::function<bool(int, uint64_t, Color, const PackedBoard&)>& fn) const {
  for (const HistNode* n = history_.get(); n; n = n->parent.get()) {
    if (!fn(n->index, n->stone_key, n->to_move, n->packed)) return;
  }
}

struct GameState::SimResult {
  bool legal = false;
  PlayError error = PlayError::OutOfBounds;
  Board board;                    // board after the move (when legal)
  int captured = 0;               // opponent stones removed
  std::optional<Coord> new_simple_ko;
};

GameState::SimResult GameState::simulate(Move m) const {
  return simulate_impl(m, true);
}

GameState::SimResult GameState::simulate_impl(Move m, bool check_superko) const {
  SimResult r;
  if (m.is_pass()) {
    r.legal = true;
    r.board = board_;
    return r;
  }
  Coord at = m.at;
  if (!board_.in_bounds(at)) {
    r.error = PlayError::OutOfBounds;
    return r;
  }
  if (board_.at(at) != Cell::Empty) {
    r.error = PlayError::Occupied;
    return r;
  }
  if (simple_ko_ && *simple_ko_ == at) {
    r.error = PlayError::Ko;
    return r;
  }

  Color me = to_move_;
  Color opp = opponent(me);
  Board nb = board_;
  nb.set(at, me);

  // Remove opponent groups left without liberties (before self-check).
  int captured = 0;
  Coord lone_capture{-1, -1};
  board_.for_each_neighbor(at, [&](Coord n) {
    if (nb.at(n) != opp) return;
    Group g = group_at(nb, n);
    if (!g.liberties.empty()) return;
    for (Coord s : g.stones) nb.set(s, Cell::Empty);
    captured += static_cast<int>(g.stones.size());
    if (g.stones.size() == 1) lone_capture = g.stones[0];
  });

  if (liberty_count(nb, at) == 0) {
    r.error = PlayError::Suicide;
    return r;
  }

  // Single-stone ko: exactly one stone captured, and the capturing stone is a
  // lone stone whose only liberty is the vacated point.
  if (captured == 1) {
    Group g = group_at(nb, at);
    if (g.stones.size() == 1 && g.liberties.size() == 1 &&
        g.liberties[0] == lone_capture) {
      r.new_simple_ko = lone_capture;
    }
  }

  // Chinese rules: reject any stone placement recreating a previous stone
  // configuration (positional superko); situational also matches side to move.
  if (check_superko && ruleset_ == Ruleset::Chinese) {
    uint64_t key = nb.stone_key();
    Color next = opp;
    bool repeat = false;
    walk_history([&](int, uint64_t k, Color side, const PackedBoard& packed) {
      if (k == key && (superko_ == SuperkoKind::Positional || side == next)) {
        if (packed.matches(nb)) {
          repeat = true;
          return false;
        }
      }
      return true;
    });
    if (repeat) {
      r.error = PlayError::Superko;
      return r;
    }
  }

  r.legal = true;
  r.board = std::move(nb);
  r.captured = captured;
  return r;
}

PlayResult GameState::play(Move m) const { return finish_play(m, simulate_impl(m, true)); }

PlayResult GameState::play_no_superko(Move m) const {
  return finish_play(m, simulate_impl(m, false));
}

PlayResult GameState::finish_play(Move m, SimResult sim) const {
  PlayResult out;
  if (!sim.legal) {
    out.error = sim.error;
    return out;
  }
  GameState next;
  next.board_ = std::move(sim.board);
  next.to_move_ = opponent(to_move_);
  next.ruleset_ = ruleset_;
  next.superko_ = superko_;
  next.simple_ko_ = sim.new_simple_ko;
  next.consecutive_passes_ = m.is_pass() ? consecutive_passes_ + 1 : 0;

  auto node = std::make_shared<HistNode>();
  node->parent = history_;
  node->index = history_ ? history_->index + 1 : 0;
  node->stone_key = next.board_.stone_key();
  node->to_move = next.to_move_;
  node->packed = PackedBoard::pack(next.board_);
  next.history_ = std::move(node);

  out.state = std::move(next);
  return out;
}

bool GameState::is_legal(Move m, PlayError* why) const {
  SimResult sim = simulate(m);
  if (!sim.legal && why) *why = sim.error;
  return sim.legal;
}

std::vector<Move> GameState::legal_moves() const {
  std::vector<Move> moves;
  for (int r = 0; r < board_.height(); ++r)
    for (int c = 0; c < board_.width(); ++c) {
      Move m = Move::point(c, r);
      if (is_legal(m)) moves.push_back(m);
    }
  moves.push_back(Move::pass());
  return moves;
}

std::optional<int> GameState::repetition_index() const {
  if (!history_) return std::nullopt;
  const HistNode* cur = history_.get();
  std::optional<int> first;
  for (const HistNode* n = cur->parent.get(); n; n = n->parent.get()) {
    if (n->stone_key == cur->stone_key && n->to_move == cur->to_move &&
        n->packed == cur->packed) {
      first = n->index;
    }
  }
  return first;
}

}  // namespace kago
