#include "kago/gadget.hpp"

#include <stdexcept>

namespace kago {

const Transform kAllTransforms[8] = {
    {0, false}, {1, false}, {2, false}, {3, false},
    {0, true},  {1, true},  {2, true},  {3, true},
};

const char* gadget_kind_name(GadgetKind k) {
  switch (k) {
    case GadgetKind::Start: return "start";
    case GadgetKind::Pipe: return "pipe";
    case GadgetKind::WhiteSwitch: return "white_switch";
    case GadgetKind::BlackSwitch: return "black_switch";
    case GadgetKind::Merge: return "merge";
    case GadgetKind::Verify: return "verify";
    case GadgetKind::Crossover: return "crossover";
    case GadgetKind::KoBlack: return "ko_black";
    case GadgetKind::KoWhite: return "ko_white";
    case GadgetKind::CapturingRace: return "capturing_race";
  }
  return "?";
}

std::optional<GadgetKind> gadget_kind_from_name(const std::string& name) {
  for (GadgetKind k : all_gadget_kinds())
    if (name == gadget_kind_name(k)) return k;
  return std::nullopt;
}

std::vector<GadgetKind> all_gadget_kinds() {
  return {GadgetKind::Start,      GadgetKind::Pipe,       GadgetKind::WhiteSwitch,
          GadgetKind::BlackSwitch, GadgetKind::Merge,      GadgetKind::Verify,
          GadgetKind::Crossover,  GadgetKind::KoBlack,    GadgetKind::KoWhite,
          GadgetKind::CapturingRace};
}

Cell GadgetTemplate::cell(Coord c) const {
  char ch = rows[c.row][c.col];
  switch (ch) {
    case 'X': case '#': return Cell::Black;
    case 'O': return Cell::White;
    default: return Cell::Empty;
  }
}

const Port* GadgetTemplate::port(const std::string& name) const {
  for (const Port& p : ports)
    if (p.name == name) return &p;
  return nullptr;
}

Coord GadgetTemplate::label(const std::string& name) const {
  auto it = labeled_points.find(name);
  if (it == labeled_points.end())
    throw std::invalid_argument("unknown labeled point: " + name);
  return it->second;
}

namespace {

Coord apply_tf(Coord c, Transform tf, int w, int h) {
  int col = c.col, row = c.row;
  if (tf.mirror) col = w - 1 - col;
  for (int i = 0; i < tf.rotate; ++i) {
    int nc = (i % 2 == 0 ? h : w) - 1 - row;
    row = col;
    col = nc;
  }
  return Coord(col, row);
}

Side apply_tf_side(Side s, Transform tf) {
  int v = static_cast<int>(s);
  if (tf.mirror && (s == Side::East || s == Side::West)) v ^= 2;  // E<->W
  v = (v + tf.rotate) % 4;  // clockwise: N->E->S->W
  return static_cast<Side>(v);
}

}  // namespace

Coord transformed_size(const GadgetTemplate& t, Transform tf) {
  return tf.rotate % 2 == 0 ? Coord(t.width, t.height) : Coord(t.height, t.width);
}

Placement instantiate(const GadgetTemplate& t, Transform tf, Coord origin,
                      int board_width, int board_height) {
  Placement out;
  Coord size = transformed_size(t, tf);
  if (origin.col < 0 || origin.row < 0 || origin.col + size.col > board_width ||
      origin.row + size.row > board_height)
    throw std::invalid_argument("instantiate: footprint out of bounds");
  for (int r = 0; r < t.height; ++r)
    for (int c = 0; c < t.width; ++c) {
      Coord local(c, r);
      Coord p = apply_tf(local, tf, t.width, t.height);
      Coord abs(origin.col + p.col, origin.row + p.row);
      Cell v = t.cell(local);
      out.cells.push_back({abs, v});
      if (v != Cell::Empty) out.stones.push_back({abs, v});
    }
  for (const Port& port : t.ports) {
    Port p = port;
    Coord q = apply_tf(port.at, tf, t.width, t.height);
    p.at = Coord(origin.col + q.col, origin.row + q.row);
    p.side = apply_tf_side(port.side, tf);
    out.ports.push_back(p);
  }
  for (const auto& [name, c] : t.labeled_points) {
    Coord q = apply_tf(c, tf, t.width, t.height);
    out.labeled_points[name] = Coord(origin.col + q.col, origin.row + q.row);
  }
  return out;
}

const GadgetTemplate& gadget(GadgetKind kind) {
  (void)kind;
  throw std::logic_error("gadget catalog not built yet");
}

std::string catalog_to_text() { return {}; }
std::vector<GadgetTemplate> catalog_from_text(const std::string&) { return {}; }

}  // namespace kago
