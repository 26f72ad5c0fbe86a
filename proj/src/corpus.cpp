#include "railknot/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "railknot/embedding.hpp"
#include "railknot/invariants.hpp"
#include "railknot/moves.hpp"

namespace railknot {

namespace {

RailKnotoidDiagram from_code(const std::vector<std::pair<int, Role>>& code, const std::map<int, int>& signs) {
  RailKnotoidDiagram d;
  for (auto [id, role] : code) d.arc_events.push_back(ArcEvent::self_pass(id, role));
  d.self_crossings = signs;
  return d;
}

constexpr Role O = Role::Over;
constexpr Role U = Role::Under;

enum class Region { Left, Strip, Right };

// Arcs without self-crossings: the region sequence fixes each pass's rail and
// direction. Calls visit(rails, dirs) for each sequence of n passes.
template <typename Visit>
void region_walks(int n, Visit&& visit) {
  std::vector<int> rails;
  std::vector<Direction> dirs;
  auto rec = [&](auto& self, Region at) -> void {
    if (static_cast<int>(rails.size()) == n) {
      if (at != Region::Left) visit(rails, dirs);
      return;
    }
    auto step = [&](int rail, Direction dir, Region next) {
      rails.push_back(rail);
      dirs.push_back(dir);
      self(self, next);
      rails.pop_back();
      dirs.pop_back();
    };
    switch (at) {
      case Region::Left:
        step(1, Direction::LeftToRight, Region::Strip);
        break;
      case Region::Strip:
        step(1, Direction::RightToLeft, Region::Left);
        step(2, Direction::LeftToRight, Region::Right);
        break;
      case Region::Right:
        step(2, Direction::RightToLeft, Region::Strip);
        break;
    }
  };
  rec(rec, Region::Left);
  rec(rec, Region::Strip);
}

// Every order of the given crossing ids along a rail with the endpoint
// inserted at every position.
std::vector<std::vector<int>> rail_orders(std::vector<int> ids) {
  std::vector<std::vector<int>> out;
  std::sort(ids.begin(), ids.end());
  do {
    for (std::size_t e = 0; e <= ids.size(); ++e) {
      std::vector<int> order = ids;
      order.insert(order.begin() + static_cast<std::ptrdiff_t>(e), 0);
      out.push_back(std::move(order));
    }
  } while (std::next_permutation(ids.begin(), ids.end()));
  return out;
}

bool knotted_over_companion(const RailKnotoidDiagram& d) {
  return !jones(companion(d, ClosureSide::Over)).is_constant(1);
}

}  // namespace

RailKnotoidDiagram empty_diagram() { return {}; }

RailKnotoidDiagram single_kink(int sign) { return from_code({{1, O}, {1, U}}, {{1, sign}}); }

RailKnotoidDiagram open_trefoil(int sign) {
  return from_code({{1, O}, {2, U}, {3, O}, {1, U}, {2, O}, {3, U}}, {{1, sign}, {2, sign}, {3, sign}});
}

RailKnotoidDiagram open_figure_eight() {
  return from_code({{1, O}, {2, U}, {3, O}, {4, U}, {2, O}, {1, U}, {4, O}, {3, U}},
                   {{1, 1}, {2, 1}, {3, -1}, {4, -1}});
}

RailKnotoidDiagram single_rail_crossing() {
  RailKnotoidDiagram d;
  d.arc_events = {ArcEvent::rail_pass(1, 1)};
  d.rail(1) = {RailItem::make_endpoint(), RailItem::crossing(1, RailFlag::ArcUnderRail, Direction::LeftToRight)};
  return d;
}

std::optional<RailKnotoidDiagram> find_knotted_companion(int max_rail_crossings) {
  for (int n = 1; n <= max_rail_crossings; ++n) {
    std::optional<RailKnotoidDiagram> found;
    region_walks(n, [&](const std::vector<int>& rails, const std::vector<Direction>& dirs) {
      if (found) return;
      std::array<std::vector<int>, 2> on_rail;
      for (int i = 0; i < n; ++i) on_rail[static_cast<std::size_t>(rails[static_cast<std::size_t>(i)] - 1)].push_back(i + 1);
      const auto orders1 = rail_orders(on_rail[0]);
      const auto orders2 = rail_orders(on_rail[1]);
      for (const auto& o1 : orders1) {
        for (const auto& o2 : orders2) {
          for (unsigned flags = 0; flags < (1u << n); ++flags) {
            RailKnotoidDiagram d;
            for (int i = 0; i < n; ++i) d.arc_events.push_back(ArcEvent::rail_pass(rails[static_cast<std::size_t>(i)], i + 1));
            for (int r = 1; r <= 2; ++r) {
              auto& items = d.rail(r);
              items.clear();
              for (int id : r == 1 ? o1 : o2) {
                if (id == 0) {
                  items.push_back(RailItem::make_endpoint());
                } else {
                  RailFlag f = (flags >> (id - 1)) & 1u ? RailFlag::ArcUnderRail : RailFlag::ArcOverRail;
                  items.push_back(RailItem::crossing(id, f, dirs[static_cast<std::size_t>(id - 1)]));
                }
              }
            }
            if (!is_planar(d)) break;  // flags do not affect planarity
            if (knotted_over_companion(d)) {
              found = std::move(d);
              return;
            }
          }
        }
      }
    });
    if (found) return found;
  }
  return std::nullopt;
}

RailKnotoidDiagram knotted_companion_witness() {
  RailKnotoidDiagram d;
  d.arc_events = {ArcEvent::rail_pass(1, 1), ArcEvent::rail_pass(1, 2), ArcEvent::rail_pass(1, 3)};
  d.rail(1) = {RailItem::make_endpoint(), RailItem::crossing(3, RailFlag::ArcOverRail, Direction::LeftToRight),
               RailItem::crossing(2, RailFlag::ArcUnderRail, Direction::RightToLeft),
               RailItem::crossing(1, RailFlag::ArcOverRail, Direction::LeftToRight)};
  return d;
}

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out{
      {"empty", empty_diagram()},
      {"kink_positive", single_kink(1)},
      {"kink_negative", single_kink(-1)},
      {"trefoil_right", open_trefoil(1)},
      {"trefoil_left", open_trefoil(-1)},
      {"figure_eight", open_figure_eight()},
      {"single_rail_crossing", single_rail_crossing()},
      {"knotted_companion", knotted_companion_witness()},
  };
  const std::vector<std::pair<std::string, RailKnotoidDiagram>> starts{
      {"trefoil_right", open_trefoil(1)},
      {"figure_eight", open_figure_eight()},
      {"knotted_companion", knotted_companion_witness()},
      {"single_rail_crossing", single_rail_crossing()},
  };
  for (const auto& [name, d] : starts) {
    for (std::uint64_t seed : {1, 2}) {
      WalkSpec w{6, seed, false, 9};
      out.push_back({name + "_walk" + std::to_string(seed), random_walk(d, w)});
    }
  }
  return out;
}

}  // namespace railknot
