#include "kago/life.hpp"

#include <algorithm>

namespace kago {

const char* terminal_status_name(TerminalStatus t) {
  switch (t) {
    case TerminalStatus::Ongoing: return "Ongoing";
    case TerminalStatus::BlackWin: return "BlackWin";
    case TerminalStatus::WhiteWin: return "WhiteWin";
    case TerminalStatus::NoResult: return "NoResult";
  }
  return "?";
}

namespace {

// Benson worker over compact per-cell ids; scratch kept per thread.
struct BensonScratch {
  std::vector<int> chain_id;    // per cell, -1 if not own color
  std::vector<int> region_id;   // per cell, -1 if own color
  std::vector<int> chain_root;  // representative cell per chain
  std::vector<char> chain_alive;
  std::vector<char> region_ok;
  std::vector<int> queue;
  // region -> bordering chains, chain -> vital regions (small flat vectors)
  std::vector<std::vector<int>> region_chains;
  std::vector<std::vector<int>> chain_regions;
};

thread_local BensonScratch g_benson;

}  // namespace

std::vector<Group> benson_alive(const Board& b, Color color) {
  auto& s = g_benson;
  int n = b.cell_count();
  s.chain_id.assign(n, -1);
  s.region_id.assign(n, -1);
  s.chain_root.clear();
  s.chain_alive.clear();
  s.region_ok.clear();
  s.region_chains.clear();
  s.chain_regions.clear();

  // Label chains of `color`.
  for (int i = 0; i < n; ++i) {
    if (b.at(b.coord(i)) != color || s.chain_id[i] >= 0) continue;
    int id = static_cast<int>(s.chain_root.size());
    s.chain_root.push_back(i);
    s.queue.clear();
    s.queue.push_back(i);
    s.chain_id[i] = id;
    while (!s.queue.empty()) {
      int idx = s.queue.back();
      s.queue.pop_back();
      b.for_each_neighbor(b.coord(idx), [&](Coord nc) {
        int ni = b.index(nc);
        if (b.at(nc) == color && s.chain_id[ni] < 0) {
          s.chain_id[ni] = id;
          s.queue.push_back(ni);
        }
      });
    }
  }
  if (s.chain_root.empty()) return {};

  // Label regions: connected components of non-`color` points.
  int region_count = 0;
  for (int i = 0; i < n; ++i) {
    if (b.at(b.coord(i)) == color || s.region_id[i] >= 0) continue;
    int id = region_count++;
    s.queue.clear();
    s.queue.push_back(i);
    s.region_id[i] = id;
    while (!s.queue.empty()) {
      int idx = s.queue.back();
      s.queue.pop_back();
      b.for_each_neighbor(b.coord(idx), [&](Coord nc) {
        int ni = b.index(nc);
        if (b.at(nc) != color && s.region_id[ni] < 0) {
          s.region_id[ni] = id;
          s.queue.push_back(ni);
        }
      });
    }
  }

  s.region_chains.assign(region_count, {});
  s.chain_regions.assign(s.chain_root.size(), {});

  // For each region: the set of bordering chains, and per bordering chain
  // whether every empty point of the region is that chain's liberty.
  // vital[r] is computed per (region, chain) pair.
  std::vector<std::vector<int>> region_vital(region_count);
  {
    // Collect bordering chains per region.
    for (int i = 0; i < n; ++i) {
      if (s.region_id[i] < 0) continue;
      int r = s.region_id[i];
      b.for_each_neighbor(b.coord(i), [&](Coord nc) {
        int ci = s.chain_id[b.index(nc)];
        if (ci >= 0) {
          auto& v = s.region_chains[r];
          if (std::find(v.begin(), v.end(), ci) == v.end()) v.push_back(ci);
        }
      });
    }
    // A chain is vital-in-region when all the region's EMPTY points touch it.
    // A region with no empty point at all (possible only on denormalized
    // boards with captured-but-present stones) is vital to nothing.
    std::vector<char> region_has_empty(region_count, 0);
    for (int i = 0; i < n; ++i)
      if (s.region_id[i] >= 0 && b.at(b.coord(i)) == Cell::Empty)
        region_has_empty[s.region_id[i]] = 1;
    for (int r = 0; r < region_count; ++r)
      region_vital[r] = region_has_empty[r] ? s.region_chains[r] : std::vector<int>{};
    for (int i = 0; i < n; ++i) {
      if (s.region_id[i] < 0) continue;
      if (b.at(b.coord(i)) != Cell::Empty) continue;
      int r = s.region_id[i];
      if (region_vital[r].empty()) continue;
      // Chains adjacent to this empty point:
      int adj[4];
      int adj_n = 0;
      b.for_each_neighbor(b.coord(i), [&](Coord nc) {
        int ci = s.chain_id[b.index(nc)];
        if (ci >= 0) adj[adj_n++] = ci;
      });
      auto& vital = region_vital[r];
      vital.erase(std::remove_if(vital.begin(), vital.end(),
                                 [&](int ci) {
                                   for (int k = 0; k < adj_n; ++k)
                                     if (adj[k] == ci) return false;
                                   return true;
                                 }),
                  vital.end());
    }
  }

  // Benson fixpoint: drop chains with <2 vital regions; drop regions
  // bordering a dropped chain; repeat.
  s.chain_alive.assign(s.chain_root.size(), 1);
  s.region_ok.assign(region_count, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t c = 0; c < s.chain_root.size(); ++c) {
      if (!s.chain_alive[c]) continue;
      int vital_count = 0;
      for (int r = 0; r < region_count; ++r) {
        if (!s.region_ok[r]) continue;
        for (int vc : region_vital[r])
          if (vc == static_cast<int>(c)) {
            ++vital_count;
            break;
          }
      }
      if (vital_count < 2) {
        s.chain_alive[c] = 0;
        changed = true;
        for (int r = 0; r < region_count; ++r) {
          if (!s.region_ok[r]) continue;
          for (int bc : s.region_chains[r])
            if (bc == static_cast<int>(c)) {
              s.region_ok[r] = 0;
              break;
            }
        }
      }
    }
  }

  std::vector<Group> out;
  for (size_t c = 0; c < s.chain_root.size(); ++c)
    if (s.chain_alive[c]) out.push_back(group_at(b, b.coord(s.chain_root[c])));
  return out;
}

bool has_pass_alive_group(const Board& b, Color color) {
  if (b.stone_count(color) == 0) return false;
  return !benson_alive(b, color).empty();
}

TerminalStatus terminal_status(const GameState& s) {
  const Board& b = s.board();
  if (b.stone_count(Color::White) == 0) return TerminalStatus::BlackWin;
  if (has_pass_alive_group(b, Color::White)) return TerminalStatus::WhiteWin;
  if (s.consecutive_passes() >= 2) return TerminalStatus::BlackWin;
  if (s.ruleset() == Ruleset::Japanese && s.repetition_index().has_value())
    return TerminalStatus::NoResult;
  return TerminalStatus::Ongoing;
}

}  // namespace kago
