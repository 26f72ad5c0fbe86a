#include "railknot/closure.hpp"

#include <algorithm>

#include "railknot/errors.hpp"

namespace railknot {

namespace {

struct RailPosition {
  int rail;
  int index;
  RailItem item;
};

LinkDiagram close_up(const RailKnotoidDiagram& d, ClosureSide side, bool forget_flags) {
  require_valid(d);

  std::map<int, RailPosition> where;
  for (int r = 1; r <= 2; ++r) {
    const auto& items = d.rail(r);
    for (int j = 0; j < static_cast<int>(items.size()); ++j) {
      const auto& it = items[static_cast<std::size_t>(j)];
      if (!it.endpoint) where[it.id] = {r, j, it};
    }
  }
  const int leg = d.endpoint_index(1);
  const int head = d.endpoint_index(2);
  const bool over = side == ClosureSide::Over;

  auto traversed = [&](const RailPosition& p) {
    int end = p.rail == 1 ? leg : head;
    return over ? p.index > end : p.index < end;
  };
  // Role of the arc at a converted crossing.
  auto arc_role = [&](const RailItem& it) {
    if (forget_flags) return over ? Role::Under : Role::Over;
    return it.flag == RailFlag::ArcOverRail ? Role::Over : Role::Under;
  };

  LinkDiagram l;
  std::vector<CrossPass> comp;
  for (const auto& e : d.arc_events) {
    if (e.is_self()) {
      comp.push_back({e.id, e.role});
      l.crossing_signs[e.id] = d.self_crossings.at(e.id);
      continue;
    }
    const RailPosition& p = where.at(e.id);
    if (!traversed(p)) continue;
    Role role = arc_role(p.item);
    comp.push_back({e.id, role});

    // Closure strand heading: up rail 2 and down rail 1 for Over, the
    // reverse for Under.
    Heading closure = (p.rail == 2) == over ? Heading::North : Heading::South;
    Heading arc = heading(p.item.dir);
    l.crossing_signs[e.id] = role == Role::Over ? frame_sign(arc, closure) : frame_sign(closure, arc);
  }

  auto emit = [&](int rail, int j) {
    const auto& it = d.rail(rail)[static_cast<std::size_t>(j)];
    comp.push_back({it.id, opposite(arc_role(it))});
  };
  if (over) {
    for (int j = head + 1; j < static_cast<int>(d.rail(2).size()); ++j) emit(2, j);
    for (int j = static_cast<int>(d.rail(1).size()) - 1; j > leg; --j) emit(1, j);
  } else {
    for (int j = head - 1; j >= 0; --j) emit(2, j);
    for (int j = 0; j < leg; ++j) emit(1, j);
  }
  l.components.push_back(std::move(comp));
  return l;
}

}  // namespace

LinkDiagram companion(const RailKnotoidDiagram& d, ClosureSide side) {
  return close_up(d, side, false);
}

LinkDiagram forget_rails_closure(const RailKnotoidDiagram& d, ClosureSide side) {
  return close_up(d, side, true);
}

LinkDiagram orient(const LinkDiagram& l, Orientation o) {
  if (l.components.size() != 1) {
    throw UsageError("orient expects a single-component diagram, got " +
                     std::to_string(l.components.size()) + " components");
  }
  if (o == Orientation::Plus) return l;
  LinkDiagram r = l;
  std::reverse(r.components[0].begin(), r.components[0].end());
  return r;
}

}  // namespace railknot
