#pragma once

#include <vector>

#include "kago/board.hpp"

namespace kago {

enum class TerminalStatus : uint8_t { Ongoing, BlackWin, WhiteWin, NoResult };

const char* terminal_status_name(TerminalStatus t);

// Unconditionally alive (pass-alive) groups of `color`, by Benson's fixpoint:
// a chain survives while it retains two vital regions; a region stays vital
// while every chain bordering it survives and all of the region's empty
// points are liberties of the chain. Returns one representative group per
// surviving chain.
std::vector<Group> benson_alive(const Board& b, Color color);

// True when `color` has at least one pass-alive chain. Cheaper entry point
// for the solver's terminal test.
bool has_pass_alive_group(const Board& b, Color color);

// Kill-all Go adjudication:
//   - no White stones                  -> BlackWin
//   - some White chain pass-alive      -> WhiteWin
//   - two consecutive passes           -> BlackWin (no pass-alive White group)
//   - Japanese rules, repeated position-> NoResult
//   - otherwise                        -> Ongoing
TerminalStatus terminal_status(const GameState& s);

}  // namespace kago
