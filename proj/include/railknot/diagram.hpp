#pragma once

// Combinatorial model of rail knotoid diagrams and closed link diagrams.
//
// Frame convention: rail 1 stands to the left of rail 2, both oriented upward.
// The arc runs from the leg (on rail 1) to the head (on rail 2). A crossing is
// positive when the pair (over direction, under direction) turns
// counterclockwise.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace railknot {

enum class Role { Over, Under };
enum class RailFlag { ArcOverRail, ArcUnderRail };
enum class Direction { LeftToRight, RightToLeft };
enum class Orientation { Plus, Minus };

// Compass heading of a strand at a crossing in the rail frame.
enum class Heading { North, East, South, West };

inline Heading heading(Direction d) {
  return d == Direction::LeftToRight ? Heading::East : Heading::West;
}

// +1 iff the pair (over heading, under heading) turns counterclockwise.
// Parallel or antiparallel headings are not crossings; they return 0.
inline int frame_sign(Heading over, Heading under) {
  int o = static_cast<int>(over), u = static_cast<int>(under);  // clockwise quarter turns
  int turn = (u - o + 4) % 4;
  return turn == 3 ? 1 : turn == 1 ? -1 : 0;
}

inline Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }
inline Direction opposite(Direction d) {
  return d == Direction::LeftToRight ? Direction::RightToLeft : Direction::LeftToRight;
}

struct ArcEvent {
  enum class Kind { SelfPass, RailPass };
  Kind kind = Kind::SelfPass;
  int id = 0;
  Role role = Role::Over;  // SelfPass only
  int rail = 0;            // RailPass only: 1 or 2

  static ArcEvent self_pass(int id, Role role) { return {Kind::SelfPass, id, role, 0}; }
  static ArcEvent rail_pass(int rail, int id) { return {Kind::RailPass, id, Role::Over, rail}; }

  bool is_self() const { return kind == Kind::SelfPass; }
  bool is_rail() const { return kind == Kind::RailPass; }

  friend bool operator==(const ArcEvent& a, const ArcEvent& b) {
    if (a.kind != b.kind || a.id != b.id) return false;
    return a.is_self() ? a.role == b.role : a.rail == b.rail;
  }
};

struct RailItem {
  bool endpoint = true;
  int id = 0;
  RailFlag flag = RailFlag::ArcOverRail;
  Direction dir = Direction::LeftToRight;

  static RailItem make_endpoint() { return {}; }
  static RailItem crossing(int id, RailFlag flag, Direction dir) { return {false, id, flag, dir}; }

  friend bool operator==(const RailItem& a, const RailItem& b) {
    if (a.endpoint || b.endpoint) return a.endpoint == b.endpoint;
    return a.id == b.id && a.flag == b.flag && a.dir == b.dir;
  }
};

struct RailKnotoidDiagram {
  std::map<int, int> self_crossings;   // id -> sign (+1/-1) under the leg-to-head orientation
  std::vector<ArcEvent> arc_events;    // leg -> head
  std::array<std::vector<RailItem>, 2> rails{std::vector<RailItem>{RailItem::make_endpoint()},
                                             std::vector<RailItem>{RailItem::make_endpoint()}};

  std::vector<RailItem>& rail(int r) { return rails.at(static_cast<std::size_t>(r - 1)); }
  const std::vector<RailItem>& rail(int r) const { return rails.at(static_cast<std::size_t>(r - 1)); }

  int self_crossing_count() const { return static_cast<int>(self_crossings.size()); }
  int rail_crossing_count() const {
    return static_cast<int>(rails[0].size() + rails[1].size()) - 2;
  }
  int crossing_count() const { return self_crossing_count() + rail_crossing_count(); }

  // Position of the Endpoint item in rail r.
  int endpoint_index(int r) const;
  // Largest id in use across both namespaces (0 when there are none).
  int max_id() const;

  friend bool operator==(const RailKnotoidDiagram&, const RailKnotoidDiagram&) = default;
};

struct CrossPass {
  int id = 0;
  Role role = Role::Over;
  friend bool operator==(const CrossPass&, const CrossPass&) = default;
};

// Closed diagram: cyclic components and oriented crossing signs.
struct LinkDiagram {
  std::vector<std::vector<CrossPass>> components;
  std::map<int, int> crossing_signs;

  int crossing_count() const { return static_cast<int>(crossing_signs.size()); }
  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

struct Violation {
  std::string location;
  std::string message;
};

std::vector<Violation> validate(const RailKnotoidDiagram& d);
std::vector<Violation> validate(const LinkDiagram& l);

// Throws UsageError listing the violations when d is not structurally valid.
void require_valid(const RailKnotoidDiagram& d);

// JSON document <-> diagram. parse_diagram throws ParseError on bad syntax,
// unknown fields or structural violations.
RailKnotoidDiagram parse_diagram(std::string_view text);
// Shape and types only; the result may violate the structural invariants.
RailKnotoidDiagram parse_diagram_unchecked(std::string_view text);
std::string serialize_diagram(const RailKnotoidDiagram& d);

// Human-readable codes: "O1+ U2- R1u→ ..." for rail knotoids; components
// separated by " | " and "()" for a crossingless component for links.
std::string render_gauss(const RailKnotoidDiagram& d);
std::string render_gauss(const LinkDiagram& l);

std::string to_string(const std::vector<Violation>& v);

}  // namespace railknot
