#pragma once

#include <map>
#include <string>
#include <vector>

#include "kago/formula.hpp"
#include "kago/gadget.hpp"

namespace kago {

struct CompileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PlacedGadget {
  GadgetKind kind;
  Transform transform;
  Coord origin;
  std::string tag;  // e.g. "var1.switch", "clause2.lit1", "ko.x2.left"
  Placement placement;
};

struct WireSegmentCells {
  std::vector<Coord> cells;  // routed wire path cells, port to port
};

struct Netlist {
  std::vector<PlacedGadget> nodes;
  // exit port -> entrance port, annotated with the routed path
  struct Edge {
    int from_node;
    std::string from_port;
    int to_node;
    std::string to_port;
    std::vector<Coord> path;  // wire cells from exit to entrance, inclusive
  };
  std::vector<Edge> edges;
  int crossovers = 0;
};

struct BoardInstance {
  GameState state;  // White to move
  Netlist netlist;
  Ruleset rules;
  std::string formula_text;  // provenance
  // variable -> verify gadget node ids (Chinese) or ko gadget node ids
  // (Japanese, one per path side)
  std::map<int, std::vector<int>> variable_map;
  std::map<std::string, std::string> census;  // gadget kind -> count, etc.
};

// TQBF -> Kill-all Go under Chinese rules.
BoardInstance compile_chinese(const QBF& f);

// Positive formula game -> Kill-all Go under Japanese rules.
BoardInstance compile_japanese(const PositiveFormula& f);

// Toggles every ko gadget of each variable to match `assignment` (bit v-1).
// Only valid on Japanese instances.
BoardInstance set_ko_states(const BoardInstance& instance, uint32_t assignment);

// Key-value sidecar with census, variable map, crossover locations, side to
// move and ruleset.
std::string instance_metadata(const BoardInstance& instance);

}  // namespace kago
