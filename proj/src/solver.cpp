#include "kago/solver.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <chrono>
#include <cstring>
#include <sstream>
#include <unordered_map>

namespace kago {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::BlackWin: return "BlackWin";
    case Outcome::NoResult: return "NoResult";
    case Outcome::WhiteWin: return "WhiteWin";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

constexpr int kValBlack = 0;
constexpr int kValNoResult = 1;
constexpr int kValWhite = 2;
constexpr int kRefNone = INT_MAX;

// Exact footprint of stone keys visited in a subtree; used to re-check a
// cached proof against the current path's ancestors. Overflows to a
// stone-count rectangle test.
struct FpSet {
  std::array<uint64_t, 24> keys;
  uint8_t n = 0;
  bool overflow = false;

  void add(uint64_t k) {
    if (overflow) return;
    for (int i = 0; i < n; ++i)
      if (keys[i] == k) return;
    if (n == keys.size()) {
      overflow = true;
      return;
    }
    keys[n++] = k;
  }
  void merge(const FpSet& o) {
    if (o.overflow) {
      overflow = true;
      return;
    }
    for (int i = 0; i < o.n; ++i) add(o.keys[i]);
  }
  bool contains(uint64_t k) const {
    for (int i = 0; i < n; ++i)
      if (keys[i] == k) return true;
    return false;
  }
};

struct SubtreeInfo {
  FpSet fp;
  int min_ref = kRefNone;  // smallest in-search ancestor ply the value depends on
  uint16_t min_b = 0, max_b = 0, min_w = 0, max_w = 0;
  uint32_t node_count = 0;
  bool touched_cap = false;

  void seed(int black, int white) {
    min_b = max_b = static_cast<uint16_t>(black);
    min_w = max_w = static_cast<uint16_t>(white);
    node_count = 1;
  }
  void merge(const SubtreeInfo& o) {
    fp.merge(o.fp);
    min_ref = std::min(min_ref, o.min_ref);
    min_b = std::min(min_b, o.min_b);
    max_b = std::max(max_b, o.max_b);
    min_w = std::min(min_w, o.min_w);
    max_w = std::max(max_w, o.max_w);
    node_count += o.node_count;
    touched_cap = touched_cap || o.touched_cap;
  }
  bool rect_contains(int b, int w) const {
    return b >= min_b && b <= max_b && w >= min_w && w <= max_w;
  }
};

struct NodeResult {
  int lo = kValBlack, hi = kValWhite;
  bool rejected = false;  // Chinese: the move creating this node is illegal
  std::vector<Move> pv;   // filled when lo == hi and freshly computed
  SubtreeInfo info;

  bool exact() const { return lo == hi; }
};

struct TTEntry {
  uint64_t key = 0;
  PackedBoard packed;
  Color side = Color::Black;
  int8_t ko_col = -1, ko_row = -1;
  uint8_t passes = 0;
  uint8_t lo = kValBlack, hi = kValWhite;
  Move best = Move::pass();
  bool has_best = false;
  bool used = false;
  bool capped = false;
  int32_t remaining = 0;
  uint32_t subtree_nodes = 0;
  FpSet fp;
  uint16_t min_b = 0, max_b = 0, min_w = 0, max_w = 0;
};

struct PathEntry {
  GameState state;
  uint64_t stone_key = 0;
  int black = 0, white = 0;
  bool by_placement = false;
};

struct PreRoot {
  PackedBoard packed;
  Color side;
  int ply;  // negative
};

struct Searcher {
  SolverConfig cfg;
  SearchLimits limits;
  uint64_t nodes = 0;
  bool aborted = false;
  std::chrono::steady_clock::time_point deadline;
  bool use_deadline = false;

  std::vector<PathEntry> path;
  std::unordered_map<uint64_t, std::vector<int>> path_plies;  // stone key -> plies
  std::vector<PreRoot> preroot;  // indexed by encode: ply = -1 - idx? kept separately
  std::unordered_map<int, int> preroot_by_ply;  // ply (negative) -> index in preroot

  std::vector<TTEntry> tt;
  uint64_t tt_mask = 0;
  CacheStats stats;

  std::vector<char> prio_mask;  // per absolute cell key: priority rank + 1
  Ruleset ruleset = Ruleset::Chinese;
  SuperkoKind superko = SuperkoKind::Positional;
  std::vector<std::vector<Move>> move_pool;  // per-ply move buffers

  int root_history = 0;

  // --- path position map -------------------------------------------------
  void push_pos(uint64_t key, int ply) { path_plies[key].push_back(ply); }
  void pop_pos(uint64_t key) {
    auto it = path_plies.find(key);
    it->second.pop_back();
    if (it->second.empty()) path_plies.erase(it);
  }

  const Board* board_at_ply(int ply) const {
    if (ply >= 0) return &path[ply].state.board();
    return nullptr;
  }

  // Finds the earliest prior occurrence of `b` (+side for situational
  // comparisons) among path ancestors and pre-root history. Returns matched
  // ply or kRefNone.
  int find_prior(const Board& b, Color side_after, bool compare_side) const {
    auto it = path_plies.find(b.stone_key());
    if (it == path_plies.end()) return kRefNone;
    int best = kRefNone;
    for (int ply : it->second) {
      if (ply >= 0) {
        const PathEntry& pe = path[ply];
        if (compare_side && pe.state.to_move() != side_after) continue;
        if (!(pe.state.board() == b)) continue;
        best = std::min(best, ply);
      } else {
        auto pit = preroot_by_ply.find(ply);
        const PreRoot& pr = preroot[pit->second];
        if (compare_side && pr.side != side_after) continue;
        if (!pr.packed.matches(b)) continue;
        best = std::min(best, ply);
      }
    }
    return best;
  }

  // --- transposition table -------------------------------------------------
  static uint64_t state_key(const GameState& s) {
    uint64_t k = s.position_key().value;
    if (auto ko = s.simple_ko_point()) k ^= zobrist_ko(*ko);
    if (s.consecutive_passes() == 1) k ^= zobrist_one_pass();
    return k;
  }

  TTEntry* tt_find(const GameState& s, uint64_t key) {
    if (tt.empty()) return nullptr;
    ++stats.probes;
    size_t base = key & tt_mask;
    for (size_t i = 0; i < 8; ++i) {
      TTEntry& e = tt[(base + i) & tt_mask];
      if (!e.used || e.key != key) continue;
      // verify-on-hit: exact position equality, never the fingerprint alone
      if (e.side != s.to_move()) continue;
      auto ko = s.simple_ko_point();
      int8_t kc = ko ? static_cast<int8_t>(ko->col) : -1;
      int8_t kr = ko ? static_cast<int8_t>(ko->row) : -1;
      if (e.ko_col != kc || e.ko_row != kr) continue;
      uint8_t passes = static_cast<uint8_t>(std::min(s.consecutive_passes(), 2));
      if (e.passes != passes) continue;
      if (!e.packed.matches(s.board())) continue;
      ++stats.hits;
      return &e;
    }
    return nullptr;
  }

  void tt_store(const GameState& s, uint64_t key, const NodeResult& r, Move best,
                bool has_best, int remaining) {
    if (tt.empty()) return;
    size_t base = key & tt_mask;
    TTEntry* slot = nullptr;
    for (size_t i = 0; i < 8; ++i) {
      TTEntry& e = tt[(base + i) & tt_mask];
      if (!e.used) { slot = &e; break; }
      if (e.key == key && e.side == s.to_move() && e.packed.matches(s.board())) {
        slot = &e;  // refresh in place
        break;
      }
    }
    if (!slot) {
      // evict the smallest stored subtree in the window
      slot = &tt[base & tt_mask];
      for (size_t i = 1; i < 8; ++i) {
        TTEntry& e = tt[(base + i) & tt_mask];
        if (e.subtree_nodes < slot->subtree_nodes) slot = &e;
      }
      if (slot->subtree_nodes > r.info.node_count) return;  // keep bigger proof
    }
    TTEntry& e = *slot;
    e.used = true;
    e.key = key;
    e.packed = PackedBoard::pack(s.board());
    e.side = s.to_move();
    auto ko = s.simple_ko_point();
    e.ko_col = ko ? static_cast<int8_t>(ko->col) : -1;
    e.ko_row = ko ? static_cast<int8_t>(ko->row) : -1;
    e.passes = static_cast<uint8_t>(std::min(s.consecutive_passes(), 2));
    e.lo = static_cast<uint8_t>(r.lo);
    e.hi = static_cast<uint8_t>(r.hi);
    e.best = best;
    e.has_best = has_best;
    e.capped = r.info.touched_cap;
    e.remaining = remaining;
    e.subtree_nodes = r.info.node_count;
    e.fp = r.info.fp;
    e.min_b = r.info.min_b;
    e.max_b = r.info.max_b;
    e.min_w = r.info.min_w;
    e.max_w = r.info.max_w;
    ++stats.stores;
  }

  // A cached proof may be reused only if no in-search ancestor position could
  // interact with the stored subtree (exact footprint when available, stone
  // count rectangle as the conservative fallback).
  bool ghi_safe(const TTEntry& e, int ply) const {
    for (int q = 0; q < ply; ++q) {
      const PathEntry& pe = path[q];
      if (!e.fp.overflow) {
        if (e.fp.contains(pe.stone_key)) return false;
      } else {
        if (pe.black >= e.min_b && pe.black <= e.max_b && pe.white >= e.min_w &&
            pe.white <= e.max_w)
          return false;
      }
    }
    return true;
  }

  // --- terminal evaluation --------------------------------------------------
  int score_no_result() const {
    switch (cfg.no_result) {
      case NoResultScoring::Middle: return kValNoResult;
      case NoResultScoring::AsWhiteWin: return kValWhite;
      case NoResultScoring::AsBlackWin: return kValBlack;
    }
    return kValNoResult;
  }

  bool check_budget() {
    if (nodes > limits.max_nodes) { aborted = true; return false; }
    if (use_deadline && (nodes & 4095) == 0 &&
        std::chrono::steady_clock::now() > deadline) {
      aborted = true;
      return false;
    }
    return true;
  }

  NodeResult search(int ply, int alpha, int beta, int remaining);
  void order_moves(const GameState& s, Move tt_move, bool has_tt,
                   std::vector<Move>& out) const;
};

// Move ordering: cached best move, then contract points, then capture /
// rescue / atari pressure from a single liberty scan, then stable cell order.
// Pass is always searched last.
void Searcher::order_moves(const GameState& s, Move tt_move, bool has_tt,
                           std::vector<Move>& out) const {
  const Board& b = s.board();
  int n = b.cell_count();
  // chain liberty counts per cell
  static thread_local std::vector<int> libs;
  static thread_local std::vector<int> seen;
  static thread_local std::vector<int> stack;
  static thread_local uint32_t stamp = 0;
  if (static_cast<int>(seen.size()) < n) {
    seen.assign(n, 0);
    libs.assign(n, 0);
  }
  if (++stamp == 0) {
    std::fill(seen.begin(), seen.end(), 0);
    stamp = 1;
  }
  static thread_local std::vector<int> lib_seen;
  if (static_cast<int>(lib_seen.size()) < n) lib_seen.assign(n, 0);

  for (int i = 0; i < n; ++i) {
    Coord c = b.coord(i);
    if (b.at(c) == Cell::Empty || seen[i] == static_cast<int>(stamp)) continue;
    Cell color = b.at(c);
    stack.clear();
    stack.push_back(i);
    seen[i] = stamp;
    int lib_count = 0;
    static thread_local std::vector<int> members;
    members.clear();
    while (!stack.empty()) {
      int idx = stack.back();
      stack.pop_back();
      members.push_back(idx);
      b.for_each_neighbor(b.coord(idx), [&](Coord nc) {
        int ni = b.index(nc);
        Cell v = b.at(nc);
        if (v == color && seen[ni] != static_cast<int>(stamp)) {
          seen[ni] = stamp;
          stack.push_back(ni);
        } else if (v == Cell::Empty && lib_seen[ni] != static_cast<int>(stamp)) {
          lib_seen[ni] = stamp;
          ++lib_count;
        }
      });
      // reset lib markers per chain: use a second stamp trick that shares the
      // same counter; cells marked above are only valid within this chain, so
      // re-clear by bumping is not possible here. Instead clear explicitly:
    }
    for (int m : members) libs[m] = lib_count;
    // clear liberty marks for the next chain
    for (int m : members) {
      b.for_each_neighbor(b.coord(m), [&](Coord nc) {
        int ni = b.index(nc);
        if (b.at(nc) == Cell::Empty) lib_seen[ni] = 0;
      });
    }
  }

  struct Scored {
    int score;
    int idx;
  };
  static thread_local std::vector<Scored> scored;
  scored.clear();
  Color me = s.to_move();
  for (int i = 0; i < n; ++i) {
    Coord c = b.coord(i);
    if (b.at(c) != Cell::Empty) continue;
    int score = 0;
    if (has_tt && !tt_move.is_pass() && tt_move.at == c) score += 1 << 28;
    if (!prio_mask.empty()) {
      int rank = prio_mask[static_cast<size_t>(c.row) * 256 + c.col];
      if (rank > 0) score += (1 << 20) - rank * 16;
    }
    b.for_each_neighbor(c, [&](Coord nc) {
      int ni = b.index(nc);
      Cell v = b.at(nc);
      if (v == Cell::Empty) { score += 1; return; }
      bool own = v == me;
      int l = libs[ni];
      if (!own) {
        if (l == 1) score += 1 << 14;        // capture
        else if (l == 2) score += 1 << 10;   // atari
        else score += 4;
      } else {
        if (l == 1) score += 1 << 12;        // rescue
        else if (l == 2) score += 1 << 8;    // extend
        else score += 2;
      }
    });
    scored.push_back({score, i});
  }
  std::stable_sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    return a.score != b.score ? a.score > b.score : a.idx < b.idx;
  });
  out.clear();
  out.reserve(scored.size() + 1);
  for (const auto& sc : scored) out.push_back(Move::point(b.coord(sc.idx)));
  out.push_back(Move::pass());
}

NodeResult Searcher::search(int ply, int alpha, int beta, int remaining) {
  NodeResult res;
  const PathEntry& pe = path[ply];
  const GameState& s = pe.state;
  const Board& b = s.board();

  ++nodes;
  res.info.seed(pe.black, pe.white);
  res.info.fp.add(pe.stone_key);
  if (!check_budget()) return res;

  // Chinese whole-position repetition: the move creating this node is illegal.
  if (ply > 0 && pe.by_placement && ruleset == Ruleset::Chinese) {
    int q = find_prior(b, s.to_move(), superko == SuperkoKind::Situational);
    if (q != kRefNone) {
      res.rejected = true;
      if (q >= 0) res.info.min_ref = std::min(res.info.min_ref, q);
      return res;
    }
  }

  // Terminals, in adjudication order.
  if (pe.white == 0) {
    res.lo = res.hi = kValBlack;
    return res;
  }
  if (has_pass_alive_group(b, Color::White)) {
    res.lo = res.hi = kValWhite;
    return res;
  }
  if (s.consecutive_passes() >= 2) {
    res.lo = res.hi = kValBlack;
    return res;
  }
  if (ruleset == Ruleset::Japanese) {
    int q = find_prior(b, s.to_move(), true);
    if (q != kRefNone) {
      res.lo = res.hi = score_no_result();
      if (q >= 0) res.info.min_ref = std::min(res.info.min_ref, q);
      return res;
    }
  }

  if (remaining <= 0) {
    res.info.touched_cap = true;
    if (cfg.horizon == HorizonPolicy::AdjudicateBenson) {
      // White is not pass-alive here (checked above).
      res.lo = res.hi = kValBlack;
    }
    return res;
  }

  // Transposition probe.
  uint64_t key = state_key(s);
  Move tt_move = Move::pass();
  bool has_tt_move = false;
  if (cfg.use_cache) {
    if (TTEntry* e = tt_find(s, key)) {
      if (e->has_best) {
        tt_move = e->best;
        has_tt_move = true;
      }
      // In Unresolved mode a capped leaf contributes only the trivial bound,
      // so every stored bound is valid at any remaining depth. In the
      // truncated game the value depends on the exact horizon.
      bool depth_ok = cfg.horizon == HorizonPolicy::Unresolved ||
                      e->remaining == remaining;
      if (depth_ok) {
        if (ghi_safe(*e, ply)) {
          // fold the cached subtree's interaction summary into this node
          SubtreeInfo cached;
          cached.fp = e->fp;
          cached.min_b = e->min_b;
          cached.max_b = e->max_b;
          cached.min_w = e->min_w;
          cached.max_w = e->max_w;
          cached.node_count = 0;
          cached.min_ref = kRefNone;
          cached.touched_cap = e->capped;
          if (e->lo == e->hi) {
            ++stats.value_uses;
            res.info.merge(cached);
            res.lo = res.hi = e->lo;
            if (e->has_best) res.pv.push_back(e->best);
            return res;
          }
          if (e->lo >= beta) {
            ++stats.value_uses;
            res.info.merge(cached);
            res.lo = e->lo;
            res.hi = kValWhite;
            return res;
          }
          if (e->hi <= alpha) {
            ++stats.value_uses;
            res.info.merge(cached);
            res.lo = kValBlack;
            res.hi = e->hi;
            return res;
          }
          if (e->lo > alpha || e->hi < beta) {
            ++stats.value_uses;
            res.info.merge(cached);
            alpha = std::max(alpha, static_cast<int>(e->lo));
            beta = std::min(beta, static_cast<int>(e->hi));
          }
        } else {
          ++stats.ghi_rejects;
        }
      }
    }
  }

  std::vector<Move>& moves = move_pool[ply];
  order_moves(s, tt_move, has_tt_move, moves);

  bool white_node = s.to_move() == Color::White;
  int best_lo = -1;           // from this node's perspective (max for mover)
  int hi_acc = -1;
  bool cut = false;
  Move best_move = Move::pass();
  bool has_best = false;
  std::vector<Move> best_pv;

  // Mover maximizes own-perspective value: White sees v, Black sees 2 - v.
  auto to_own = [&](int v) { return white_node ? v : kValWhite - v; };
  int my_alpha = white_node ? alpha : kValWhite - beta;
  int my_beta = white_node ? beta : kValWhite - alpha;

  for (const Move& m : moves) {
    PlayResult pr = s.play_no_superko(m);
    if (!pr.ok()) continue;
    GameState child = std::move(*pr.state);
    PathEntry ce;
    ce.stone_key = child.board().stone_key();
    ce.black = child.board().stone_count(Color::Black);
    ce.white = child.board().stone_count(Color::White);
    ce.by_placement = !m.is_pass();
    ce.state = std::move(child);

    push_pos(pe.stone_key, ply);  // parent position becomes an ancestor
    path.push_back(std::move(ce));
    NodeResult cr = search(ply + 1, alpha, beta, remaining - 1);
    path.pop_back();
    pop_pos(pe.stone_key);

    res.info.merge(cr.info);
    if (aborted) return res;
    if (cr.rejected) continue;

    int c_lo = to_own(white_node ? cr.lo : cr.hi);   // own-perspective lower bound
    int c_hi = to_own(white_node ? cr.hi : cr.lo);   // own-perspective upper bound
    if (c_lo > best_lo) {
      best_lo = c_lo;
      best_move = m;
      has_best = true;
      if (cr.exact()) {
        best_pv.clear();
        best_pv.push_back(m);
        best_pv.insert(best_pv.end(), cr.pv.begin(), cr.pv.end());
      } else {
        best_pv.clear();
      }
    }
    hi_acc = std::max(hi_acc, c_hi);

    my_alpha = std::max(my_alpha, best_lo);
    if (best_lo >= my_beta) { cut = true; break; }
    alpha = white_node ? my_alpha : kValWhite - my_beta;
    beta = white_node ? my_beta : kValWhite - my_alpha;
  }

  int node_lo_own, node_hi_own;
  if (best_lo < 0) {
    // every candidate rejected; only unreachable in practice since pass is
    // always legal, but keep a sane value
    node_lo_own = node_hi_own = to_own(kValBlack);
  } else {
    node_lo_own = best_lo;
    node_hi_own = cut ? kValWhite : std::max(best_lo, hi_acc);
  }

  res.lo = white_node ? node_lo_own : kValWhite - node_hi_own;
  res.hi = white_node ? node_hi_own : kValWhite - node_lo_own;
  if (res.exact() && !best_pv.empty()) res.pv = std::move(best_pv);

  if (cfg.use_cache && !aborted && res.info.min_ref >= ply) {
    tt_store(s, key, res, best_move, has_best, remaining);
  }
  return res;
}

Outcome value_to_outcome(int v) {
  switch (v) {
    case kValBlack: return Outcome::BlackWin;
    case kValNoResult: return Outcome::NoResult;
    case kValWhite: return Outcome::WhiteWin;
  }
  return Outcome::Unknown;
}

}  // namespace

SolveResult solve(const GameState& root, const SearchLimits& limits,
                  const SolverConfig& config) {
  Searcher sr;
  sr.cfg = config;
  sr.limits = limits;
  sr.ruleset = root.ruleset();
  sr.superko = root.superko_kind();
  if (limits.max_seconds < 1e8) {
    sr.use_deadline = true;
    sr.deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(limits.max_seconds));
  }
  if (config.use_cache) {
    size_t want = std::max<size_t>(1024, config.cache_max_entries);
    size_t size = 1;
    while (size < want) size <<= 1;
    sr.tt.resize(size);
    sr.tt_mask = size - 1;
  }
  if (!config.priority_points.empty()) {
    sr.prio_mask.assign(256 * 256, 0);
    int rank = 1;
    for (Coord c : config.priority_points) {
      if (c.col >= 0 && c.col < 256 && c.row >= 0 && c.row < 256) {
        char& slot = sr.prio_mask[static_cast<size_t>(c.row) * 256 + c.col];
        if (slot == 0) slot = static_cast<char>(std::min(rank, 126));
      }
      ++rank;
    }
  }

  // Pre-root history: identical for every search path, so recorded once with
  // negative plies (never popped).
  sr.root_history = root.history_size();
  {
    int h0 = sr.root_history - 1;  // root's own index
    root.walk_history([&](int index, uint64_t key, Color side, const PackedBoard& packed) {
      if (index == h0) return true;  // root itself lives in path[0]
      PreRoot pr;
      pr.packed = packed;
      pr.side = side;
      pr.ply = index - h0;
      sr.preroot_by_ply[pr.ply] = static_cast<int>(sr.preroot.size());
      sr.preroot.push_back(std::move(pr));
      sr.push_pos(key, index - h0);
      return true;
    });
  }

  PathEntry re;
  re.state = root;
  re.stone_key = root.board().stone_key();
  re.black = root.board().stone_count(Color::Black);
  re.white = root.board().stone_count(Color::White);
  re.by_placement = false;
  sr.path.reserve(limits.max_depth + 8);
  sr.path.push_back(std::move(re));
  sr.move_pool.resize(limits.max_depth + 8);

  SolveResult out;
  std::ostringstream trace;

  std::vector<int> depths;
  if (config.iterative_deepening && config.horizon == HorizonPolicy::Unresolved) {
    for (int d = 8; d < limits.max_depth; d += (d < 64 ? 8 : d / 4))
      depths.push_back(d);
  }
  depths.push_back(limits.max_depth);

  NodeResult last;
  for (int d : depths) {
    ++out.iterations;
    last = sr.search(0, kValBlack, kValWhite, d);
    if (config.collect_trace) {
      trace << "depth=" << d << " nodes=" << sr.nodes << " bound=[" << last.lo
            << ',' << last.hi << "]" << (sr.aborted ? " aborted" : "") << '\n';
    }
    if (sr.aborted || last.exact()) break;
  }

  out.nodes = sr.nodes;
  out.cache = sr.stats;
  out.cache.entries = 0;
  for (const auto& e : sr.tt)
    if (e.used) ++out.cache.entries;
  out.trace = trace.str();

  if (!sr.aborted && last.exact()) {
    out.outcome = value_to_outcome(last.lo);
    out.principal_variation = std::move(last.pv);
    // Extend a cache-truncated variation by walking stored best moves.
    GameState cur = root;
    bool replay_ok = true;
    for (const Move& m : out.principal_variation) {
      PlayResult pr = cur.play(m);
      if (!pr.ok()) { replay_ok = false; break; }
      cur = std::move(*pr.state);
    }
    if (replay_ok) {
      int guard = limits.max_depth + 8;
      while (guard-- > 0 && terminal_status(cur) == TerminalStatus::Ongoing) {
        uint64_t key = Searcher::state_key(cur);
        TTEntry* e = sr.tt_find(cur, key);
        if (!e || e->lo != e->hi || !e->has_best) break;
        PlayResult pr = cur.play(e->best);
        if (!pr.ok()) break;
        out.principal_variation.push_back(e->best);
        cur = std::move(*pr.state);
      }
    }
  }
  return out;
}

std::vector<Move> best_line(const GameState& root, const SearchLimits& limits,
                            const SolverConfig& config) {
  return solve(root, limits, config).principal_variation;
}

}  // namespace kago
