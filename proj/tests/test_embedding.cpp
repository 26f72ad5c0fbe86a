#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "railknot/corpus.hpp"
#include "railknot/embedding.hpp"

using namespace railknot;

TEST_CASE("fixtures are planar") {
  for (const auto& e : corpus()) CHECK_MESSAGE(is_planar(e.diagram), e.name);
}

TEST_CASE("empty diagram") {
  auto emb = embed(empty_diagram());
  REQUIRE(emb);
  CHECK(emb->leg_side() == Side::Right);
  CHECK(emb->head_side() == Side::Left);
  // Arc, two rails and infinity: V - E + F = 2 with V = 3, E = 5.
  CHECK(emb->faces().size() == 4);
}

TEST_CASE("departure sides follow the first rail crossing") {
  // Crossing rail 1 left to right above the leg means leaving to the left.
  auto emb = embed(single_rail_crossing());
  REQUIRE(emb);
  CHECK(emb->leg_side() == Side::Left);

  RailKnotoidDiagram wrong = single_rail_crossing();
  wrong.rail(1)[1].dir = Direction::RightToLeft;
  CHECK(!is_planar(wrong));
}

TEST_CASE("a kink bounds a monogon face") {
  auto emb = embed(single_kink(1));
  REQUIRE(emb);
  CHECK(emb->is_face({emb->arc_edge(1)}));
  CHECK(!emb->is_face({emb->arc_edge(0)}));
}

TEST_CASE("non-realizable codes") {
  // Trefoil code with mixed signs has no planar realization.
  RailKnotoidDiagram d = open_trefoil(1);
  d.self_crossings[2] = -1;
  CHECK(!is_planar(d));

  // Virtual-looking two-crossing code O1 O2 U1 U2.
  RailKnotoidDiagram v;
  v.self_crossings = {{1, 1}, {2, 1}};
  v.arc_events = {ArcEvent::self_pass(1, Role::Over), ArcEvent::self_pass(2, Role::Over),
                  ArcEvent::self_pass(1, Role::Under), ArcEvent::self_pass(2, Role::Under)};
  bool any = false;
  for (int a : {1, -1}) {
    for (int b : {1, -1}) {
      v.self_crossings = {{1, a}, {2, b}};
      any = any || is_planar(v);
    }
  }
  CHECK(!any);
}
