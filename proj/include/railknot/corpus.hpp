#pragma once

// Named fixture diagrams used by the tests, the acceptance suite and the CLI
// self-test.

#include <optional>
#include <string>
#include <vector>

#include "railknot/diagram.hpp"

namespace railknot {

RailKnotoidDiagram empty_diagram();
// O1 U1 with the given sign.
RailKnotoidDiagram single_kink(int sign);
// The arc carries the trefoil code O1 U2 O3 U1 O2 U3 with all signs equal to
// sign; no rail crossings.
RailKnotoidDiagram open_trefoil(int sign);
// Figure-eight pattern O1 U2 O3 U4 O2 U1 O4 U3, no rail crossings.
RailKnotoidDiagram open_figure_eight();
// The arc leaves the leg to the left and crosses rail 1 once, above the leg,
// under the rail, left to right.
RailKnotoidDiagram single_rail_crossing();

// First diagram, in a fixed enumeration order, with no self-crossings and at
// most max_rail_crossings rail crossings whose over companion has Jones
// polynomial different from 1.
std::optional<RailKnotoidDiagram> find_knotted_companion(int max_rail_crossings);

// The stored result of find_knotted_companion(5).
RailKnotoidDiagram knotted_companion_witness();

struct CorpusEntry {
  std::string name;
  RailKnotoidDiagram diagram;
};

// Fixtures above plus diagrams derived from them by seeded move walks.
std::vector<CorpusEntry> corpus();

}  // namespace railknot
