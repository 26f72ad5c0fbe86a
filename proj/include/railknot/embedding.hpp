#pragma once

// Planar structure of a rail knotoid diagram.
//
// The arc, the two rails and a vertex at infinity (where the four rail ends
// meet) form a graph whose rotation system is fixed by the crossing signs and
// rail-crossing directions. Face tracing on that rotation system decides
// whether a code is realizable in the plane and exposes its faces, which the
// move engine uses to check that a bigon or triangle is empty.

#include <optional>
#include <vector>

#include "railknot/diagram.hpp"

namespace railknot {

enum class Side { Left, Right };

class Embedding {
 public:
  // Side to which the arc departs from the leg / arrives at the head.
  Side leg_side() const { return leg_side_; }
  Side head_side() const { return head_side_; }

  // Edge ids. Arc gap g (0..n) is the segment entering arc event g (gap n
  // ends at the head). Rail gap j (0..len) is the rail segment below item j.
  int arc_edge(int gap) const { return gap; }
  int rail_edge(int rail, int gap) const { return (rail == 1 ? rail1_base_ : rail2_base_) + gap; }

  const std::vector<std::vector<int>>& faces() const { return faces_; }

  // True when some face is bounded by exactly this multiset of edges.
  bool is_face(std::vector<int> edges) const;

 private:
  friend std::optional<Embedding> embed(const RailKnotoidDiagram& d);

  Side leg_side_ = Side::Right;
  Side head_side_ = Side::Left;
  int rail1_base_ = 0;
  int rail2_base_ = 0;
  std::vector<std::vector<int>> faces_;
};

// The planar embedding of d, or nullopt when d is not realizable. Departure
// sides are not part of the code; the first realizable choice is returned.
// Requires a structurally valid diagram.
std::optional<Embedding> embed(const RailKnotoidDiagram& d);

inline bool is_planar(const RailKnotoidDiagram& d) { return embed(d).has_value(); }

}  // namespace railknot
