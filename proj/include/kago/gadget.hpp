#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kago/board.hpp"

namespace kago {

enum class GadgetKind : uint8_t {
  Start,
  Pipe,
  WhiteSwitch,
  BlackSwitch,
  Merge,
  Verify,
  Crossover,
  KoBlack,   // ko held by Black: variable false
  KoWhite,   // ko held by White: variable true
  CapturingRace,
};

const char* gadget_kind_name(GadgetKind k);
std::optional<GadgetKind> gadget_kind_from_name(const std::string& name);

enum class PortKind : uint8_t { Entrance, Exit };

// Direction a port faces (out of the footprint).
enum class Side : uint8_t { North, East, South, West };

struct Port {
  std::string name;
  Coord at;            // boundary cell of the footprint, local coordinates
  Side side;
  PortKind kind;
  int liberty_budget;  // traversing chain's liberty allowance at this port
};

// One of the 8 dihedral transforms: rotation (0..3 quarter turns clockwise)
// then optional horizontal mirror.
struct Transform {
  uint8_t rotate = 0;
  bool mirror = false;

  bool operator==(const Transform&) const = default;
};

extern const Transform kAllTransforms[8];

struct GadgetTemplate {
  GadgetKind kind;
  int width = 0;
  int height = 0;
  // Local layout: '.' empty, 'X' black, 'O' white, '#' wall (immortal black
  // fill owned by the surrounding board). Ports must lie on '.' cells.
  std::vector<std::string> rows;
  std::vector<Port> ports;
  std::map<std::string, Coord> labeled_points;  // "point 1" .. "point N"

  Cell cell(Coord c) const;
  const Port* port(const std::string& name) const;
  Coord label(const std::string& name) const;
};

struct Placement {
  std::vector<std::pair<Coord, Cell>> stones;  // absolute, walls included
  std::vector<std::pair<Coord, Cell>> cells;   // every footprint cell
  std::vector<Port> ports;                     // absolute coordinates
  std::map<std::string, Coord> labeled_points;
};

// Rigid-motion image of the template at `origin` (top-left of the transformed
// bounding box). Throws std::invalid_argument when it does not fit the board.
Placement instantiate(const GadgetTemplate& t, Transform tf, Coord origin,
                      int board_width, int board_height);

Coord transformed_size(const GadgetTemplate& t, Transform tf);

// The gadget catalog reconstructed from the construction narratives; every
// layout is validated behaviorally by the contract suites.
const GadgetTemplate& gadget(GadgetKind kind);
std::vector<GadgetKind> all_gadget_kinds();

// Versioned plain-text serialization of the whole catalog.
std::string catalog_to_text();
std::vector<GadgetTemplate> catalog_from_text(const std::string& text);

}  // namespace kago
