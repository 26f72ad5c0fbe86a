#pragma once

// Dense working form of a LinkDiagram for the skein recursions. Crossing ids
// index `sign`; a zero sign marks an id that no longer occurs.

#include <string>
#include <utility>
#include <vector>

#include "railknot/diagram.hpp"

namespace railknot::detail {

struct Pass {
  int id;
  bool over;
};

struct LinkCode {
  std::vector<std::vector<Pass>> comps;
  std::vector<int> sign;

  static LinkCode from(const LinkDiagram& l);

  int crossings() const;
  int writhe() const;
  int components() const { return static_cast<int>(comps.size()); }
};

struct Location {
  int comp;
  int index;
};

// The two passes of crossing c, in traversal order.
std::pair<Location, Location> locate(const LinkCode& code, int c);

LinkCode switch_crossing(LinkCode code, int c);

// Orientation-respecting reconnection at c (the L0 of the oriented skein).
LinkCode smooth_oriented(const LinkCode& code, int c);

// The other reconnection at c; part of the result is traversed backwards and
// crossings between that part and the rest change sign.
LinkCode smooth_unoriented(const LinkCode& code, int c);

// Removes every curl (two consecutive passes of one crossing), repeatedly.
// Returns the sum of the removed crossing signs.
int strip_kinks(LinkCode& code);

// First crossing met as an underpass before its overpass, walking the
// components in order from their first pass; -1 when the code is descending.
int first_non_descending(const LinkCode& code);

// Relabels crossings and picks component order and basepoints
// deterministically; returns the relabelled code and a key that determines it.
std::pair<LinkCode, std::string> canonical(const LinkCode& code);

}  // namespace railknot::detail
