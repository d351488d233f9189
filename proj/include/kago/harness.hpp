#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kago/gadget.hpp"
#include "kago/solver.hpp"

namespace kago {

// How a harness terminates a port: LibertyRich carves an eyespace pocket of
// `pocket` cells behind the port (a stand-in for "pipe gadgets provide
// liberties" and the chance to live there); Blocked walls the port shut;
// Wire attaches a white entry stub in atari, the shape every gadget is
// entered with.
struct HarnessEnd {
  enum Kind : uint8_t { Blocked, LibertyRich, Wire } kind = Blocked;
  int pocket = 7;

  static HarnessEnd blocked() { return {Blocked, 0}; }
  static HarnessEnd liberty_rich(int cells = 7) { return {LibertyRich, cells}; }
  static HarnessEnd wire() { return {Wire, 0}; }
};

struct Harness {
  GameState state;                      // White to move
  std::map<std::string, Coord> points;  // template labels -> absolute coords
  std::map<std::string, Coord> port_cells;
  std::vector<Coord> priority_points;   // labels + port cells, for ordering
};

// Embeds the (transformed) gadget in a pass-alive black frame with the given
// treatment per port. Entrances get a white entry stub unless overridden.
Harness build_harness(const GadgetTemplate& t, Transform tf,
                      const std::vector<std::pair<std::string, HarnessEnd>>& ends);

// ---------------------------------------------------------------------------
// Declarative contract suite: clause name, harness stubs, optional scripted
// prefix, expected outcome.

struct ContractClause {
  std::string name;
  GadgetKind gadget;
  Transform transform;
  std::vector<std::pair<std::string, HarnessEnd>> ends;
  std::vector<std::string> prefix_moves;  // labels like "point 1" or "b4"
  Outcome expected = Outcome::Unknown;
  uint64_t node_budget = 100'000'000;
  std::string pv_expect;  // comma-separated labels the PV must start with
};

struct ClauseReport {
  ContractClause clause;
  bool proven = false;        // expected outcome proven
  bool budget_exceeded = false;
  Outcome got = Outcome::Unknown;
  uint64_t nodes = 0;
  std::vector<Move> refutation;  // principal variation on failure
};

struct ContractReport {
  std::vector<ClauseReport> clauses;
  bool all_proven() const;
};

// Text format: one clause per "clause <name>" block of key:value lines.
std::vector<ContractClause> parse_contract_suite(const std::string& text);

ClauseReport check_clause(const ContractClause& clause);
ContractReport check_contract(const std::vector<ContractClause>& suite,
                              std::ostream* progress = nullptr);

// Built-in suites, one per gadget kind.
std::string builtin_contract_suite(GadgetKind kind);

}  // namespace kago
