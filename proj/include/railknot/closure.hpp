#pragma once

// Companion loops: the arc joined back from head to leg along the rails and a
// far top (Over) or far bottom (Under) segment. Rail crossings met on the way
// become ordinary crossings carrying the diagram's over/under data.

#include "railknot/diagram.hpp"

namespace railknot {

enum class ClosureSide { Over, Under };

// Single-component diagram stored with the leg-to-head orientation. The
// closure runs head -> up rail 2 -> across the top -> down rail 1 -> leg for
// Over, and head -> down rail 2 -> across the bottom -> up rail 1 -> leg for
// Under. Rail crossings on the other side of an endpoint vanish.
LinkDiagram companion(const RailKnotoidDiagram& d, ClosureSide side);

// Plus keeps the stored orientation, Minus reverses the traversal. Signs are
// unchanged since both strands of every crossing reverse together.
LinkDiagram orient(const LinkDiagram& l, Orientation o);

// Same path as companion(), but the closing strand passes over (Over) or
// under (Under) everything it meets: the knotoid closure once rails are
// forgotten.
LinkDiagram forget_rails_closure(const RailKnotoidDiagram& d, ClosureSide side);

}  // namespace railknot
