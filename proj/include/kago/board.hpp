#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace kago {

enum class Cell : uint8_t { Empty = 0, Black = 1, White = 2 };
using Color = Cell;  // Black or White only when used as a color

constexpr Color opponent(Color c) {
  return c == Color::Black ? Color::White : Color::Black;
}

char cell_char(Cell c);  // '.', 'X', 'O'

struct Coord {
  int16_t col = 0;
  int16_t row = 0;

  Coord() = default;
  constexpr Coord(int c, int r)
      : col(static_cast<int16_t>(c)), row(static_cast<int16_t>(r)) {}
  bool operator==(const Coord&) const = default;
  bool operator<(const Coord& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

struct Move {
  // col == -1 encodes a pass
  Coord at = Coord(-1, -1);

  static Move pass() { return Move{}; }
  static Move point(Coord c) { return Move{c}; }
  static Move point(int col, int row) { return Move{Coord(col, row)}; }
  bool is_pass() const { return at.col < 0; }
  bool operator==(const Move&) const = default;
};

enum class Ruleset : uint8_t { Chinese, Japanese };

// Superko comparison flavor. Positional (default) forbids recreating a prior
// stone configuration regardless of who is to move; situational also requires
// the same side to move.
enum class SuperkoKind : uint8_t { Positional, Situational };

enum class PlayError : uint8_t {
  OutOfBounds,
  Occupied,
  Suicide,
  Ko,
  Superko,
};

const char* play_error_name(PlayError e);

struct PositionKey {
  uint64_t value = 0;
  bool operator==(const PositionKey&) const = default;
};

// Zobrist table shared by all boards (coordinates hashed by absolute col/row,
// stable across board sizes). Fixed seed, deterministic across runs.
uint64_t zobrist_cell(Coord c, Color color);
uint64_t zobrist_side_white();
uint64_t zobrist_ko(Coord c);      // simple-ko ban point plane
uint64_t zobrist_one_pass();       // exactly one preceding pass

class Board {
 public:
  Board() = default;
  Board(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty_size() const { return width_ == 0; }

  bool in_bounds(Coord c) const {
    return c.col >= 0 && c.row >= 0 && c.col < width_ && c.row < height_;
  }
  Cell at(Coord c) const { return cells_[index(c)]; }
  void set(Coord c, Cell v);

  uint64_t stone_key() const { return stone_key_; }
  int stone_count(Color c) const {
    return c == Color::Black ? black_count_ : white_count_;
  }

  // Recomputes the zobrist key from scratch (for incremental-vs-full checks).
  uint64_t recompute_stone_key() const;

  bool operator==(const Board& o) const {
    return width_ == o.width_ && height_ == o.height_ && cells_ == o.cells_;
  }

  int index(Coord c) const { return c.row * width_ + c.col; }
  Coord coord(int idx) const { return Coord(idx % width_, idx / width_); }
  int cell_count() const { return width_ * height_; }

  template <typename Fn>
  void for_each_neighbor(Coord c, Fn&& fn) const {
    if (c.col > 0) fn(Coord(c.col - 1, c.row));
    if (c.col + 1 < width_) fn(Coord(c.col + 1, c.row));
    if (c.row > 0) fn(Coord(c.col, c.row - 1));
    if (c.row + 1 < height_) fn(Coord(c.col, c.row + 1));
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Cell> cells_;
  uint64_t stone_key_ = 0;
  int black_count_ = 0;
  int white_count_ = 0;
};

struct Group {
  Color color = Color::Black;
  std::vector<Coord> stones;
  std::vector<Coord> liberties;
};

// Group and liberty queries. `at` must be occupied; throws std::invalid_argument
// on an empty point (the spec's EmptyPoint error).
Group group_at(const Board& b, Coord at);
std::vector<Coord> liberties(const Board& b, Coord at);
int liberty_count(const Board& b, Coord at);

// 2-bit-per-cell snapshot used for exact position comparison in history and
// solver caches (fingerprints alone are never trusted).
struct PackedBoard {
  int16_t width = 0;
  int16_t height = 0;
  std::vector<uint8_t> bits;

  static PackedBoard pack(const Board& b);
  bool matches(const Board& b) const;
  bool operator==(const PackedBoard&) const = default;
};

struct PlayResult;

// Immutable game state. play() returns a fresh value; history is a
// structurally shared chain, so copies are cheap.
class GameState {
 public:
  GameState() = default;
  GameState(Board board, Color to_move, Ruleset ruleset,
            SuperkoKind superko = SuperkoKind::Positional);

  const Board& board() const { return board_; }
  Color to_move() const { return to_move_; }
  Ruleset ruleset() const { return ruleset_; }
  SuperkoKind superko_kind() const { return superko_; }
  std::optional<Coord> simple_ko_point() const { return simple_ko_; }
  int consecutive_passes() const { return consecutive_passes_; }

  uint64_t stone_key() const { return board_.stone_key(); }
  PositionKey position_key() const {
    uint64_t k = board_.stone_key();
    if (to_move_ == Color::White) k ^= zobrist_side_white();
    return PositionKey{k};
  }

  // Number of positions recorded, including the current one.
  int history_size() const;
  // Visits history from the current position back to the initial one.
  // fn(index, stone_key, to_move, packed) — return false to stop.
  void walk_history(
      const std::function<bool(int, uint64_t, Color, const PackedBoard&)>& fn) const;

  PlayResult play(Move m) const;
  bool is_legal(Move m, PlayError* why = nullptr) const;
  std::vector<Move> legal_moves() const;  // always includes pass

  // Expansion path for the solver: enforces occupancy, suicide and simple-ko
  // rules but skips the superko history walk; the caller adjudicates
  // whole-position repetition against its own path records.
  PlayResult play_no_superko(Move m) const;

  // First earlier history index holding the same position (stones + side to
  // move), verified by exact comparison. nullopt when the current position is
  // fresh. This is the spec's repetition_status.
  std::optional<int> repetition_index() const;

 private:
  struct HistNode {
    std::shared_ptr<const HistNode> parent;
    int index = 0;
    uint64_t stone_key = 0;
    Color to_move = Color::Black;
    PackedBoard packed;
  };

  struct SimResult;
  SimResult simulate(Move m) const;
  SimResult simulate_impl(Move m, bool check_superko) const;
  PlayResult finish_play(Move m, SimResult sim) const;

  Board board_;
  Color to_move_ = Color::Black;
  Ruleset ruleset_ = Ruleset::Chinese;
  SuperkoKind superko_ = SuperkoKind::Positional;
  std::optional<Coord> simple_ko_;
  int consecutive_passes_ = 0;
  std::shared_ptr<const HistNode> history_;
};

struct PlayResult {
  std::optional<GameState> state;
  PlayError error = PlayError::OutOfBounds;

  bool ok() const { return state.has_value(); }
};

}  // namespace kago
