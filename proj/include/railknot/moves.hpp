#pragma once

// Reidemeister moves, their rail variants and slide moves as rewrites of the
// rail knotoid code. docs/moves.md lists the site and parameter layout of
// every kind together with the pattern each one matches.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "railknot/diagram.hpp"

namespace railknot {

enum class MoveKind {
  R1Add,
  R1Remove,
  R2Add,
  R2Remove,
  R3,
  RailR2Add,
  RailR2Remove,
  RailR3,
  SlideAdd,
  SlideRemove,
};

std::string_view name(MoveKind k);
std::optional<MoveKind> parse_move_kind(std::string_view s);

const std::set<MoveKind>& all_move_kinds();
// Everything except R1Add and R1Remove.
const std::set<MoveKind>& regular_move_kinds();

bool is_add(MoveKind k);

struct Move {
  MoveKind kind = MoveKind::R1Add;
  std::vector<int> site;
  std::vector<int> params;

  friend auto operator<=>(const Move&, const Move&) = default;
};

std::string describe(const Move& m);

// All applicable moves of the given kinds, sorted. The diagram must be valid;
// a code without a planar realization admits no moves.
std::vector<Move> enumerate_moves(const RailKnotoidDiagram& d, const std::set<MoveKind>& kinds);

// Throws UsageError naming the failed condition when m does not apply to d.
RailKnotoidDiagram apply_move(const RailKnotoidDiagram& d, const Move& m);

struct WalkSpec {
  int steps = 0;
  std::uint64_t seed = 0;
  bool regular_only = false;
  // Add moves that would exceed this many crossings are skipped.
  std::optional<int> max_crossings;
};

// Each step picks a move kind uniformly among those with an applicable move,
// then one of its moves uniformly, from a generator seeded with w.seed.
// The applied moves are appended to trace when it is given.
RailKnotoidDiagram random_walk(const RailKnotoidDiagram& d, const WalkSpec& w,
                               std::vector<Move>* trace = nullptr);

// Applies the first applicable removing move until none is left.
RailKnotoidDiagram simplify(const RailKnotoidDiagram& d);

}  // namespace railknot
