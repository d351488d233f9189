#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kago/board.hpp"
#include "kago/life.hpp"

namespace kago {

enum class Outcome : uint8_t { BlackWin, NoResult, WhiteWin, Unknown };

const char* outcome_name(Outcome o);

struct SearchLimits {
  uint64_t max_nodes = 100'000'000;
  int max_depth = 400;        // game-length cap measured from the root
  double max_seconds = 1e9;
};

// What a node at the depth cap is worth. Unresolved keeps proofs honest
// (capped leaves prove nothing); AdjudicateBenson defines a truncated game
// whose horizon is scored like a double pass, used to compare against
// fixed-horizon reference implementations.
enum class HorizonPolicy : uint8_t { Unresolved, AdjudicateBenson };

// How a Japanese long-cycle terminal is scored. Middle keeps the three-valued
// lattice BlackWin < NoResult < WhiteWin; the other two collapse NoResult
// into one side's win for re-solving under either interpretation.
enum class NoResultScoring : uint8_t { Middle, AsWhiteWin, AsBlackWin };

struct SolverConfig {
  bool use_cache = true;
  size_t cache_max_entries = 1u << 20;
  HorizonPolicy horizon = HorizonPolicy::Unresolved;
  NoResultScoring no_result = NoResultScoring::Middle;
  std::vector<Coord> priority_points;  // tried first at every node
  bool iterative_deepening = true;
  bool collect_trace = false;
};

struct CacheStats {
  uint64_t probes = 0;
  uint64_t hits = 0;          // exact-position hits
  uint64_t value_uses = 0;    // hits whose value bounds were usable
  uint64_t ghi_rejects = 0;   // hits re-expanded for path-dependence
  uint64_t stores = 0;
  uint64_t entries = 0;
};

struct SolveResult {
  Outcome outcome = Outcome::Unknown;
  std::vector<Move> principal_variation;
  uint64_t nodes = 0;
  CacheStats cache;
  int iterations = 0;
  std::string trace;  // one line per deepening iteration when enabled

  bool proven() const { return outcome != Outcome::Unknown; }
};

SolveResult solve(const GameState& root, const SearchLimits& limits,
                  const SolverConfig& config = {});

std::vector<Move> best_line(const GameState& root, const SearchLimits& limits,
                            const SolverConfig& config = {});

}  // namespace kago
