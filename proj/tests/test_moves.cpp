#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "railknot/corpus.hpp"
#include "railknot/embedding.hpp"
#include "railknot/errors.hpp"
#include "railknot/invariants.hpp"
#include "railknot/moves.hpp"

using namespace railknot;

namespace {

std::map<MoveKind, int> count_by_kind(const std::vector<Move>& moves) {
  std::map<MoveKind, int> out;
  for (const auto& m : moves) out[m.kind]++;
  return out;
}

const std::map<MoveKind, MoveKind> kInverse{
    {MoveKind::R1Add, MoveKind::R1Remove},
    {MoveKind::R2Add, MoveKind::R2Remove},
    {MoveKind::RailR2Add, MoveKind::RailR2Remove},
    {MoveKind::SlideAdd, MoveKind::SlideRemove},
};

// Small diagrams with rail crossings on both rails and both sides of the endpoints.
std::vector<RailKnotoidDiagram> samples() {
  std::vector<RailKnotoidDiagram> out;
  for (const auto& e : corpus()) {
    if (e.diagram.crossing_count() <= 8) out.push_back(e.diagram);
  }
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    out.push_back(random_walk(open_trefoil(1), WalkSpec{6, seed, true, 9}));
  }
  return out;
}

}  // namespace

TEST_CASE("moves on the empty diagram") {
  const auto moves = enumerate_moves(empty_diagram(), all_move_kinds());
  const auto by_kind = count_by_kind(moves);
  CHECK(by_kind.at(MoveKind::R1Add) == 4);
  CHECK(by_kind.at(MoveKind::R2Add) > 0);
  CHECK(by_kind.count(MoveKind::R1Remove) == 0);
  CHECK(by_kind.count(MoveKind::R2Remove) == 0);
  CHECK(by_kind.count(MoveKind::RailR2Remove) == 0);
  CHECK(by_kind.count(MoveKind::SlideRemove) == 0);
  CHECK(by_kind.count(MoveKind::SlideAdd) == 0);

  // R1Add with both signs; RailR2Add on each rail, below and above the endpoint.
  std::set<int> signs;
  std::set<std::pair<int, int>> rail_sites;
  for (const auto& m : moves) {
    if (m.kind == MoveKind::R1Add) signs.insert(m.params[0]);
    if (m.kind == MoveKind::RailR2Add) rail_sites.insert({m.site[1], m.site[2]});
  }
  CHECK(signs == std::set<int>{-1, 1});
  CHECK(rail_sites == std::set<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}, {2, 1}});
}

TEST_CASE("R1 examples") {
  const auto kinked = apply_move(empty_diagram(), Move{MoveKind::R1Add, {0}, {1, 1}});
  CHECK(render_gauss(kinked) == "O1+ U1+");
  const auto moves = enumerate_moves(single_kink(1), all_move_kinds());
  CHECK(count_by_kind(moves)[MoveKind::R1Remove] == 1);
  CHECK(simplify(single_kink(1)) == empty_diagram());
  CHECK(simplify(empty_diagram()) == empty_diagram());
}

TEST_CASE("rail bigon above the leg") {
  // Leaving the leg to the right, the first crossing above the leg runs right to left.
  const auto d = apply_move(empty_diagram(), Move{MoveKind::RailR2Add, {0, 1, 1}, {1, 1, 0}});
  CHECK(render_gauss(d) == "R1u← R1u→");
  CHECK(d.rail(1) == std::vector<RailItem>{RailItem::make_endpoint(),
                                           RailItem::crossing(1, RailFlag::ArcUnderRail, Direction::RightToLeft),
                                           RailItem::crossing(2, RailFlag::ArcUnderRail, Direction::LeftToRight)});
  CHECK_THROWS_AS(apply_move(empty_diagram(), Move{MoveKind::RailR2Add, {0, 1, 1}, {1, 0, 0}}), UsageError);
  CHECK(count_by_kind(enumerate_moves(d, {MoveKind::RailR2Remove}))[MoveKind::RailR2Remove] == 1);
}

TEST_CASE("rejections name the failed condition") {
  try {
    apply_move(open_trefoil(1), Move{MoveKind::R1Remove, {0}, {}});
    FAIL("accepted");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("not the two passes of one crossing") != std::string::npos);
  }
  try {
    apply_move(empty_diagram(), Move{MoveKind::SlideAdd, {1, 1}, {}});
    FAIL("accepted");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("no rail crossing next to the endpoint") != std::string::npos);
  }
  CHECK_THROWS_AS(apply_move(empty_diagram(), Move{MoveKind::R1Add, {3}, {1, 1}}), UsageError);
  CHECK_THROWS_AS(apply_move(empty_diagram(), Move{MoveKind::R1Add, {0}, {1}}), UsageError);
}

TEST_CASE("every Add move is undone by its Remove") {
  for (const auto& d : samples()) {
    const std::string original = serialize_diagram(d);
    for (const auto& m : enumerate_moves(d, {MoveKind::R1Add, MoveKind::R2Add, MoveKind::RailR2Add, MoveKind::SlideAdd})) {
      const auto out = apply_move(d, m);
      bool restored = false;
      for (const auto& back : enumerate_moves(out, {kInverse.at(m.kind)})) {
        if (serialize_diagram(apply_move(out, back)) == original) {
          restored = true;
          break;
        }
      }
      CHECK_MESSAGE(restored, describe(m) << " on " << render_gauss(d));
    }
  }
}

TEST_CASE("R3 and rail R3 are involutions") {
  int seen = 0;
  for (const auto& d : samples()) {
    for (const auto& m : enumerate_moves(d, {MoveKind::R3, MoveKind::RailR3})) {
      const auto out = apply_move(d, m);
      const auto again = enumerate_moves(out, {m.kind});
      const bool back = std::any_of(again.begin(), again.end(), [&](const Move& x) { return apply_move(out, x) == d; });
      CHECK_MESSAGE(back, describe(m) << " on " << render_gauss(d));
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("moves keep diagrams valid and planar") {
  for (const auto& d : samples()) {
    for (const auto& m : enumerate_moves(d, all_move_kinds())) {
      if (m.kind == MoveKind::R2Add && m.site[0] % 3 != 0) continue;  // keep the run short
      const auto out = apply_move(d, m);
      CHECK(validate(out).empty());
      CHECK(is_planar(out));
    }
  }
}

TEST_CASE("each move kind preserves the certificate") {
  std::map<MoveKind, int> checked;
  for (const auto& d : samples()) {
    const auto cert = certificate(d);
    for (const auto& m : enumerate_moves(d, regular_move_kinds())) {
      if (is_add(m.kind) && checked[m.kind] > 150) continue;
      const auto out = apply_move(d, m);
      const auto v = compare(cert, certificate(out), true);
      CHECK_MESSAGE(!v.distinguished(), describe(m) << " on " << render_gauss(d));
      checked[m.kind]++;
    }
  }
  for (MoveKind k : regular_move_kinds()) CHECK_MESSAGE(checked[k] > 0, name(k));
}

TEST_CASE("R1 scales the rail brackets by -A^(3s) and keeps the rest") {
  for (const auto& d : samples()) {
    const auto cert = certificate(d);
    const auto moves = enumerate_moves(d, {MoveKind::R1Add});
    for (std::size_t i = 0; i < moves.size(); i += 3) {
      const auto& m = moves[i];
      const auto out = apply_move(d, m);
      const Laurent1 factor = Laurent1::monomial(kVarA, {3 * m.params[0]}, -1);
      const auto c = certificate(out);
      CHECK(c.bracket_o == factor * cert.bracket_o);
      CHECK(c.bracket_u == factor * cert.bracket_u);
      CHECK(c.writhe_o_plus == cert.writhe_o_plus + m.params[0]);
      CHECK(!compare(cert, c).distinguished());
    }
  }
}

TEST_CASE("slides are detected when the new crossing is changed") {
  int mutated = 0;
  for (const auto& d : samples()) {
    const auto cert = certificate(d);
    for (const auto& m : enumerate_moves(d, {MoveKind::SlideAdd})) {
      auto out = apply_move(d, m);
      const int x = d.max_id() + 1;
      out.self_crossings[x] = -out.self_crossings[x];
      for (auto& e : out.arc_events) {
        if (e.is_self() && e.id == x) e.role = opposite(e.role);
      }
      if (!is_planar(out)) continue;
      ++mutated;
      CHECK(compare(cert, certificate(out), true).distinguished());
    }
  }
  CHECK(mutated > 0);
}

TEST_CASE("slide remove then add restores the certificate") {
  int seen = 0;
  for (const auto& d : samples()) {
    for (const auto& m : enumerate_moves(d, {MoveKind::SlideRemove})) {
      const auto removed = apply_move(d, m);
      const auto back = apply_move(removed, Move{MoveKind::SlideAdd, {m.site[0], 1 - m.site[1]}, {}});
      CHECK(certificate(back) == certificate(d));
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("random walks") {
  const auto d = open_figure_eight();
  CHECK(random_walk(d, WalkSpec{0, 5}) == d);
  const WalkSpec w{12, 42, false, 10};
  CHECK(random_walk(d, w) == random_walk(d, w));
  CHECK(!(random_walk(d, w) == random_walk(d, WalkSpec{12, 43, false, 10})));

  std::vector<Move> trace;
  const auto out = random_walk(d, WalkSpec{10, 3, true, 10}, &trace);
  CHECK(trace.size() == 10);
  for (const auto& m : trace) {
    CHECK(m.kind != MoveKind::R1Add);
    CHECK(m.kind != MoveKind::R1Remove);
  }
  CHECK(out.crossing_count() <= 10);
  CHECK(rail_bracket(out, ClosureSide::Over) == rail_bracket(d, ClosureSide::Over));
  CHECK(rail_bracket(out, ClosureSide::Under) == rail_bracket(d, ClosureSide::Under));
}

TEST_CASE("simplify after a walk") {
  const auto walked = random_walk(empty_diagram(), WalkSpec{15, 2024, false, 10});
  const auto s = simplify(walked);
  CHECK(s.crossing_count() <= walked.crossing_count());
  CHECK(!compare(certificate(s), certificate(empty_diagram())).distinguished());
  CHECK(enumerate_moves(s, {MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::RailR2Remove, MoveKind::SlideRemove}).empty());
}
