#include "railknot/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <utility>

#include "railknot/embedding.hpp"
#include "railknot/errors.hpp"

namespace railknot {

namespace {

constexpr std::array<std::pair<MoveKind, std::string_view>, 10> kNames{{
    {MoveKind::R1Add, "R1Add"},
    {MoveKind::R1Remove, "R1Remove"},
    {MoveKind::R2Add, "R2Add"},
    {MoveKind::R2Remove, "R2Remove"},
    {MoveKind::R3, "R3"},
    {MoveKind::RailR2Add, "RailR2Add"},
    {MoveKind::RailR2Remove, "RailR2Remove"},
    {MoveKind::RailR3, "RailR3"},
    {MoveKind::SlideAdd, "SlideAdd"},
    {MoveKind::SlideRemove, "SlideRemove"},
}};

struct Outcome {
  std::optional<RailKnotoidDiagram> diagram;
  std::string failure;

  static Outcome fail(std::string why) { return {std::nullopt, std::move(why)}; }
  static Outcome ok(RailKnotoidDiagram d) { return {std::move(d), {}}; }
};

// The diagram a move is tried on, with its embedding computed on demand.
class Site {
 public:
  explicit Site(const RailKnotoidDiagram& d) : d_(d) {}

  const RailKnotoidDiagram& diagram() const { return d_; }
  int events() const { return static_cast<int>(d_.arc_events.size()); }
  const ArcEvent& event(int p) const { return d_.arc_events[static_cast<std::size_t>(p)]; }

  const std::optional<Embedding>& embedding() {
    if (!computed_) {
      embedding_ = embed(d_);
      computed_ = true;
    }
    return embedding_;
  }

 private:
  const RailKnotoidDiagram& d_;
  bool computed_ = false;
  std::optional<Embedding> embedding_;
};

bool in_range(int v, int lo, int hi) { return v >= lo && v <= hi; }

void insert_events(RailKnotoidDiagram& d, int gap, std::initializer_list<ArcEvent> evs) {
  d.arc_events.insert(d.arc_events.begin() + gap, evs);
}

int arc_position(const RailKnotoidDiagram& d, const ArcEvent& e) {
  auto it = std::find(d.arc_events.begin(), d.arc_events.end(), e);
  return it == d.arc_events.end() ? -1 : static_cast<int>(it - d.arc_events.begin());
}

int rail_index(const RailKnotoidDiagram& d, int r, int id) {
  const auto& items = d.rail(r);
  for (int j = 0; j < static_cast<int>(items.size()); ++j) {
    const auto& it = items[static_cast<std::size_t>(j)];
    if (!it.endpoint && it.id == id) return j;
  }
  return -1;
}

Outcome require_face(const RailKnotoidDiagram& out, std::vector<int> edges, const char* what) {
  auto emb = embed(out);
  if (!emb) return Outcome::fail("the result has no planar realization");
  if (!emb->is_face(std::move(edges))) return Outcome::fail(std::string("the new ") + what + " does not bound a face");
  return Outcome::ok(out);
}

Outcome check_shape(const Move& m, std::size_t sites, std::size_t params) {
  if (m.site.size() != sites || m.params.size() != params) {
    return Outcome::fail("expected " + std::to_string(sites) + " site and " + std::to_string(params) +
                         " parameter values");
  }
  return Outcome::ok({});
}

Outcome r1_add(Site& s, const Move& m) {
  if (auto o = check_shape(m, 1, 2); !o.diagram) return o;
  const int g = m.site[0], sign = m.params[0], over_first = m.params[1];
  if (!in_range(g, 0, s.events())) return Outcome::fail("arc gap out of range");
  if (sign != 1 && sign != -1) return Outcome::fail("sign must be +1 or -1");
  if (!in_range(over_first, 0, 1)) return Outcome::fail("order flag must be 0 or 1");
  RailKnotoidDiagram out = s.diagram();
  const int x = out.max_id() + 1;
  out.self_crossings[x] = sign;
  if (over_first) {
    insert_events(out, g, {ArcEvent::self_pass(x, Role::Over), ArcEvent::self_pass(x, Role::Under)});
  } else {
    insert_events(out, g, {ArcEvent::self_pass(x, Role::Under), ArcEvent::self_pass(x, Role::Over)});
  }
  return require_face(out, {g + 1}, "curl");
}

Outcome r1_remove(Site& s, const Move& m) {
  if (auto o = check_shape(m, 1, 0); !o.diagram) return o;
  const int p = m.site[0];
  if (!in_range(p, 0, s.events() - 2)) return Outcome::fail("arc position out of range");
  const auto &a = s.event(p), &b = s.event(p + 1);
  if (!a.is_self() || !b.is_self() || a.id != b.id) {
    return Outcome::fail("events " + std::to_string(p) + " and " + std::to_string(p + 1) +
                         " are not the two passes of one crossing");
  }
  const auto& emb = s.embedding();
  if (!emb) return Outcome::fail("the diagram has no planar realization");
  if (!emb->is_face({emb->arc_edge(p + 1)})) return Outcome::fail("the curl does not bound a face");
  RailKnotoidDiagram out = s.diagram();
  out.self_crossings.erase(a.id);
  out.arc_events.erase(out.arc_events.begin() + p, out.arc_events.begin() + p + 2);
  return Outcome::ok(std::move(out));
}

Outcome r2_add(Site& s, const Move& m) {
  if (auto o = check_shape(m, 2, 3); !o.diagram) return o;
  const int g1 = m.site[0], g2 = m.site[1];
  const int first_over = m.params[0], reversed = m.params[1], sign = m.params[2];
  if (!in_range(g1, 0, s.events()) || !in_range(g2, g1, s.events())) {
    return Outcome::fail("arc gaps must satisfy 0 <= g1 <= g2 <= n");
  }
  if (!in_range(first_over, 0, 1) || !in_range(reversed, 0, 1)) return Outcome::fail("flags must be 0 or 1");
  if (sign != 1 && sign != -1) return Outcome::fail("sign must be +1 or -1");
  RailKnotoidDiagram out = s.diagram();
  const int a = out.max_id() + 1, b = a + 1;
  const Role r1 = first_over ? Role::Over : Role::Under;
  const Role r2 = opposite(r1);
  out.self_crossings[a] = sign;
  out.self_crossings[b] = -sign;
  if (reversed) {
    insert_events(out, g2, {ArcEvent::self_pass(b, r2), ArcEvent::self_pass(a, r2)});
  } else {
    insert_events(out, g2, {ArcEvent::self_pass(a, r2), ArcEvent::self_pass(b, r2)});
  }
  insert_events(out, g1, {ArcEvent::self_pass(a, r1), ArcEvent::self_pass(b, r1)});
  return require_face(out, {g1 + 1, g2 + 3}, "bigon");
}

Outcome r2_remove(Site& s, const Move& m) {
  if (auto o = check_shape(m, 2, 0); !o.diagram) return o;
  const int i = m.site[0], j = m.site[1];
  if (!in_range(i, 0, s.events() - 2) || !in_range(j, i + 2, s.events() - 2)) {
    return Outcome::fail("positions must satisfy i + 2 <= j <= n - 2");
  }
  for (int p : {i, i + 1, j, j + 1}) {
    if (!s.event(p).is_self()) return Outcome::fail("event " + std::to_string(p) + " is not a self pass");
  }
  const int a = s.event(i).id, b = s.event(i + 1).id;
  const int c = s.event(j).id, e = s.event(j + 1).id;
  if (a == b || !((c == a && e == b) || (c == b && e == a))) {
    return Outcome::fail("the two event pairs are not the passes of the same two crossings");
  }
  if (s.event(i).role != s.event(i + 1).role) {
    return Outcome::fail("one strand is not over or under at both crossings");
  }
  const auto& signs = s.diagram().self_crossings;
  if (signs.at(a) != -signs.at(b)) return Outcome::fail("the crossing signs are not opposite");
  const auto& emb = s.embedding();
  if (!emb) return Outcome::fail("the diagram has no planar realization");
  if (!emb->is_face({emb->arc_edge(i + 1), emb->arc_edge(j + 1)})) {
    return Outcome::fail("the bigon does not bound a face");
  }
  RailKnotoidDiagram out = s.diagram();
  out.self_crossings.erase(a);
  out.self_crossings.erase(b);
  out.arc_events.erase(out.arc_events.begin() + j, out.arc_events.begin() + j + 2);
  out.arc_events.erase(out.arc_events.begin() + i, out.arc_events.begin() + i + 2);
  return Outcome::ok(std::move(out));
}

Outcome planar_result(RailKnotoidDiagram out) {
  if (!is_planar(out)) return Outcome::fail("the result has no planar realization");
  return Outcome::ok(std::move(out));
}

Outcome r3(Site& s, const Move& m) {
  if (auto o = check_shape(m, 3, 0); !o.diagram) return o;
  const auto& g = m.site;
  if (!(g[0] < g[1] && g[1] < g[2]) || !in_range(g[0], 1, s.events() - 1) ||
      !in_range(g[2], 1, s.events() - 1)) {
    return Outcome::fail("arc edges must be increasing interior edges");
  }
  std::map<int, int> corners;
  bool some_strand_level = false;
  for (int e : g) {
    const auto &a = s.event(e - 1), &b = s.event(e);
    if (!a.is_self() || !b.is_self() || a.id == b.id) {
      return Outcome::fail("arc edge " + std::to_string(e) + " does not join two distinct self-crossings");
    }
    corners[a.id]++;
    corners[b.id]++;
    some_strand_level = some_strand_level || a.role == b.role;
  }
  if (corners.size() != 3 || g[0] + 1 == g[1] || g[1] + 1 == g[2]) {
    return Outcome::fail("the three edges do not form a triangle of three crossings");
  }
  if (!some_strand_level) return Outcome::fail("the heights are cyclic: no strand is over or under at both");
  const auto& emb = s.embedding();
  if (!emb) return Outcome::fail("the diagram has no planar realization");
  if (!emb->is_face({g[0], g[1], g[2]})) return Outcome::fail("the triangle does not bound a face");
  RailKnotoidDiagram out = s.diagram();
  for (int e : g) std::swap(out.arc_events[static_cast<std::size_t>(e - 1)], out.arc_events[static_cast<std::size_t>(e)]);
  return planar_result(std::move(out));
}

Outcome rail_r2_add(Site& s, const Move& m) {
  if (auto o = check_shape(m, 3, 3); !o.diagram) return o;
  const int g = m.site[0], r = m.site[1], j = m.site[2];
  const int under = m.params[0], first_r2l = m.params[1], first_upper = m.params[2];
  if (!in_range(g, 0, s.events())) return Outcome::fail("arc gap out of range");
  if (r != 1 && r != 2) return Outcome::fail("rail must be 1 or 2");
  if (!in_range(j, 0, static_cast<int>(s.diagram().rail(r).size()))) return Outcome::fail("rail gap out of range");
  if (!in_range(under, 0, 1) || !in_range(first_r2l, 0, 1) || !in_range(first_upper, 0, 1)) {
    return Outcome::fail("flags must be 0 or 1");
  }
  RailKnotoidDiagram out = s.diagram();
  const int c1 = out.max_id() + 1, c2 = c1 + 1;
  const RailFlag flag = under ? RailFlag::ArcUnderRail : RailFlag::ArcOverRail;
  const Direction d1 = first_r2l ? Direction::RightToLeft : Direction::LeftToRight;
  insert_events(out, g, {ArcEvent::rail_pass(r, c1), ArcEvent::rail_pass(r, c2)});
  auto first = RailItem::crossing(c1, flag, d1);
  auto second = RailItem::crossing(c2, flag, opposite(d1));
  auto& items = out.rail(r);
  if (first_upper) {
    items.insert(items.begin() + j, {second, first});
  } else {
    items.insert(items.begin() + j, {first, second});
  }
  auto emb = embed(out);
  if (!emb) return Outcome::fail("the result has no planar realization");
  if (!emb->is_face({emb->arc_edge(g + 1), emb->rail_edge(r, j + 1)})) {
    return Outcome::fail("the new bigon does not bound a face");
  }
  return Outcome::ok(std::move(out));
}

Outcome rail_r2_remove(Site& s, const Move& m) {
  if (auto o = check_shape(m, 1, 0); !o.diagram) return o;
  const int p = m.site[0];
  if (!in_range(p, 0, s.events() - 2)) return Outcome::fail("arc position out of range");
  const auto &a = s.event(p), &b = s.event(p + 1);
  if (!a.is_rail() || !b.is_rail() || a.rail != b.rail) {
    return Outcome::fail("events " + std::to_string(p) + " and " + std::to_string(p + 1) +
                         " are not two passes across the same rail");
  }
  const int r = a.rail;
  const int i1 = rail_index(s.diagram(), r, a.id), i2 = rail_index(s.diagram(), r, b.id);
  if (std::abs(i1 - i2) != 1) return Outcome::fail("the two rail crossings are not adjacent on the rail");
  const auto &c1 = s.diagram().rail(r)[static_cast<std::size_t>(i1)];
  const auto &c2 = s.diagram().rail(r)[static_cast<std::size_t>(i2)];
  if (c1.flag != c2.flag) return Outcome::fail("the rail crossings have different flags");
  if (c1.dir == c2.dir) return Outcome::fail("the rail crossings have the same direction");
  const auto& emb = s.embedding();
  if (!emb) return Outcome::fail("the diagram has no planar realization");
  if (!emb->is_face({emb->arc_edge(p + 1), emb->rail_edge(r, std::max(i1, i2))})) {
    return Outcome::fail("the bigon does not bound a face");
  }
  RailKnotoidDiagram out = s.diagram();
  out.arc_events.erase(out.arc_events.begin() + p, out.arc_events.begin() + p + 2);
  auto& items = out.rail(r);
  items.erase(items.begin() + std::min(i1, i2), items.begin() + std::max(i1, i2) + 1);
  return Outcome::ok(std::move(out));
}

// Strand s crossing the rail; true when s is above the rail.
bool above_rail(const RailItem& c) { return c.flag == RailFlag::ArcOverRail; }

Outcome rail_r3(Site& s, const Move& m) {
  if (auto o = check_shape(m, 4, 0); !o.diagram) return o;
  const int ga = m.site[0], gb = m.site[1], r = m.site[2], j = m.site[3];
  if (!(ga < gb) || !in_range(ga, 1, s.events() - 1) || !in_range(gb, 1, s.events() - 1)) {
    return Outcome::fail("arc edges must be increasing interior edges");
  }
  if (r != 1 && r != 2) return Outcome::fail("rail must be 1 or 2");
  const auto& items = s.diagram().rail(r);
  if (!in_range(j, 1, static_cast<int>(items.size()) - 1)) return Outcome::fail("rail edge out of range");
  const RailItem &lo = items[static_cast<std::size_t>(j - 1)], &hi = items[static_cast<std::size_t>(j)];
  if (lo.endpoint || hi.endpoint) return Outcome::fail("the rail edge does not join two rail crossings");

  // For each arc edge: the rail crossing at one end, the self pass at the other.
  struct Strand {
    int rail_id;
    ArcEvent self;
  };
  std::vector<Strand> strands;
  for (int e : {ga, gb}) {
    const auto &a = s.event(e - 1), &b = s.event(e);
    if (a.is_rail() == b.is_rail()) {
      return Outcome::fail("arc edge " + std::to_string(e) + " does not join a rail pass and a self pass");
    }
    const auto& rp = a.is_rail() ? a : b;
    if (rp.rail != r) return Outcome::fail("arc edge " + std::to_string(e) + " meets the other rail");
    strands.push_back({rp.id, a.is_rail() ? b : a});
  }
  if (strands[0].self.id != strands[1].self.id) return Outcome::fail("the arc edges meet different self-crossings");
  if (strands[0].rail_id == strands[1].rail_id) return Outcome::fail("the arc edges meet the same rail crossing");
  for (const auto& st : strands) {
    if (st.rail_id != lo.id && st.rail_id != hi.id) {
      return Outcome::fail("the arc edges do not meet the rail edge's crossings");
    }
  }
  const RailItem& c1 = strands[0].rail_id == lo.id ? lo : hi;
  const RailItem& c2 = strands[0].rail_id == lo.id ? hi : lo;
  const bool s1_over_rail = above_rail(c1);
  const bool rail_over_s2 = !above_rail(c2);
  const bool s2_over_s1 = strands[1].self.role == Role::Over;
  if (s1_over_rail == rail_over_s2 && rail_over_s2 == s2_over_s1) {
    return Outcome::fail("the heights are cyclic");
  }
  const auto& emb = s.embedding();
  if (!emb) return Outcome::fail("the diagram has no planar realization");
  if (!emb->is_face({emb->arc_edge(ga), emb->arc_edge(gb), emb->rail_edge(r, j)})) {
    return Outcome::fail("the triangle does not bound a face");
  }
  RailKnotoidDiagram out = s.diagram();
  std::swap(out.rail(r)[static_cast<std::size_t>(j - 1)], out.rail(r)[static_cast<std::size_t>(j)]);
  for (int e : {ga, gb}) {
    std::swap(out.arc_events[static_cast<std::size_t>(e - 1)], out.arc_events[static_cast<std::size_t>(e)]);
  }
  return planar_result(std::move(out));
}

// Endpoint on rail r passes the rail crossing next to it (above when up).
// The terminal segment is dragged along and crosses the crossing's strand.
Outcome slide_add(Site& s, const Move& m) {
  if (auto o = check_shape(m, 2, 0); !o.diagram) return o;
  const int r = m.site[0], up = m.site[1];
  if (r != 1 && r != 2) return Outcome::fail("rail must be 1 or 2");
  if (!in_range(up, 0, 1)) return Outcome::fail("direction flag must be 0 or 1");
  const auto& d = s.diagram();
  const int e = d.endpoint_index(r);
  const int ci = up ? e + 1 : e - 1;
  if (!in_range(ci, 0, static_cast<int>(d.rail(r).size()) - 1)) {
    return Outcome::fail("no rail crossing next to the endpoint on that side");
  }
  const RailItem c = d.rail(r)[static_cast<std::size_t>(ci)];
  const int cp = arc_position(d, ArcEvent::rail_pass(r, c.id));
  const int terminal = r == 1 ? 0 : s.events() - 1;
  if (cp == terminal) return Outcome::fail("the rail crossing lies on the terminal segment");
  const auto& emb = s.embedding();
  if (!emb) return Outcome::fail("the diagram has no planar realization");
  const Side side = r == 1 ? emb->leg_side() : emb->head_side();

  const Role terminal_role = c.flag == RailFlag::ArcUnderRail ? Role::Over : Role::Under;
  const bool after = (c.dir == Direction::LeftToRight) == (side == Side::Right);
  const Heading slide = up ? Heading::North : Heading::South;
  const Heading terminal_heading = r == 1 ? (up ? Heading::South : Heading::North) : slide;
  const Heading strand_heading = heading(c.dir);
  const int sign = terminal_role == Role::Over ? frame_sign(terminal_heading, strand_heading)
                                               : frame_sign(strand_heading, terminal_heading);

  RailKnotoidDiagram out = d;
  const int x = out.max_id() + 1;
  out.self_crossings[x] = sign;
  insert_events(out, after ? cp + 1 : cp, {ArcEvent::self_pass(x, opposite(terminal_role))});
  if (r == 1) {
    insert_events(out, 0, {ArcEvent::self_pass(x, terminal_role)});
  } else {
    out.arc_events.push_back(ArcEvent::self_pass(x, terminal_role));
  }
  std::swap(out.rail(r)[static_cast<std::size_t>(e)], out.rail(r)[static_cast<std::size_t>(ci)]);
  return planar_result(std::move(out));
}

Outcome slide_remove(Site& s, const Move& m) {
  if (auto o = check_shape(m, 2, 0); !o.diagram) return o;
  const int r = m.site[0], up = m.site[1];
  if (r != 1 && r != 2) return Outcome::fail("rail must be 1 or 2");
  if (!in_range(up, 0, 1)) return Outcome::fail("direction flag must be 0 or 1");
  const auto& d = s.diagram();
  if (s.events() < 2) return Outcome::fail("the terminal event is not a self pass");
  const ArcEvent t = s.event(r == 1 ? 0 : s.events() - 1);
  if (!t.is_self()) return Outcome::fail("the terminal event is not a self pass");
  const int e = d.endpoint_index(r);
  const int ci = up ? e + 1 : e - 1;
  if (!in_range(ci, 0, static_cast<int>(d.rail(r).size()) - 1)) {
    return Outcome::fail("no rail crossing next to the endpoint on that side");
  }

  RailKnotoidDiagram candidate = d;
  candidate.self_crossings.erase(t.id);
  std::erase_if(candidate.arc_events, [&](const ArcEvent& a) { return a.is_self() && a.id == t.id; });
  std::swap(candidate.rail(r)[static_cast<std::size_t>(e)], candidate.rail(r)[static_cast<std::size_t>(ci)]);
  if (!is_planar(candidate)) return Outcome::fail("removing the crossing leaves no planar realization");

  Site back(candidate);
  Outcome redo = slide_add(back, Move{MoveKind::SlideAdd, {r, up ? 0 : 1}, {}});
  if (!redo.diagram) return Outcome::fail("the terminal crossing does not come from a slide");
  RailKnotoidDiagram& again = *redo.diagram;
  const int fresh = candidate.max_id() + 1;
  if (fresh != t.id) {
    again.self_crossings[t.id] = again.self_crossings.at(fresh);
    again.self_crossings.erase(fresh);
    for (auto& a : again.arc_events) {
      if (a.is_self() && a.id == fresh) a.id = t.id;
    }
  }
  if (!(again == d)) return Outcome::fail("the terminal crossing does not match the slide past the adjacent rail crossing");
  return Outcome::ok(std::move(candidate));
}

Outcome attempt(Site& s, const Move& m) {
  switch (m.kind) {
    case MoveKind::R1Add: return r1_add(s, m);
    case MoveKind::R1Remove: return r1_remove(s, m);
    case MoveKind::R2Add: return r2_add(s, m);
    case MoveKind::R2Remove: return r2_remove(s, m);
    case MoveKind::R3: return r3(s, m);
    case MoveKind::RailR2Add: return rail_r2_add(s, m);
    case MoveKind::RailR2Remove: return rail_r2_remove(s, m);
    case MoveKind::RailR3: return rail_r3(s, m);
    case MoveKind::SlideAdd: return slide_add(s, m);
    case MoveKind::SlideRemove: return slide_remove(s, m);
  }
  return Outcome::fail("unknown move kind");
}

// Candidate moves of one kind; attempt() decides which of them apply.
std::vector<Move> proposals(Site& s, MoveKind k) {
  std::vector<Move> out;
  const int n = s.events();
  switch (k) {
    case MoveKind::R1Add:
      for (int g = 0; g <= n; ++g) {
        for (int sign : {-1, 1}) {
          for (int of : {0, 1}) out.push_back({k, {g}, {sign, of}});
        }
      }
      break;
    case MoveKind::R1Remove:
    case MoveKind::RailR2Remove:
      for (int p = 0; p + 1 < n; ++p) out.push_back({k, {p}, {}});
      break;
    case MoveKind::R2Add:
      for (int g1 = 0; g1 <= n; ++g1) {
        for (int g2 = g1; g2 <= n; ++g2) {
          for (int fo : {0, 1}) {
            for (int rev : {0, 1}) {
              for (int sign : {-1, 1}) out.push_back({k, {g1, g2}, {fo, rev, sign}});
            }
          }
        }
      }
      break;
    case MoveKind::R2Remove:
      for (int i = 0; i + 1 < n; ++i) {
        const auto &a = s.event(i), &b = s.event(i + 1);
        if (!a.is_self() || !b.is_self() || a.id == b.id) continue;
        for (int j = i + 2; j + 1 < n; ++j) out.push_back({k, {i, j}, {}});
      }
      break;
    case MoveKind::R3:
    case MoveKind::RailR3: {
      const auto& emb = s.embedding();
      if (!emb) break;
      for (const auto& f : emb->faces()) {
        if (f.size() != 3) continue;
        std::vector<int> arc, rail;
        for (int e : f) (e <= n ? arc : rail).push_back(e);
        std::sort(arc.begin(), arc.end());
        if (k == MoveKind::R3 && arc.size() == 3) out.push_back({k, arc, {}});
        if (k == MoveKind::RailR3 && arc.size() == 2 && rail.size() == 1) {
          for (int r : {1, 2}) {
            const int j = rail[0] - emb->rail_edge(r, 0);
            if (in_range(j, 0, static_cast<int>(s.diagram().rail(r).size()))) {
              out.push_back({k, {arc[0], arc[1], r, j}, {}});
            }
          }
        }
      }
      break;
    }
    case MoveKind::RailR2Add:
      for (int g = 0; g <= n; ++g) {
        for (int r : {1, 2}) {
          for (int j = 0; j <= static_cast<int>(s.diagram().rail(r).size()); ++j) {
            for (int under : {0, 1}) {
              for (int dir : {0, 1}) {
                for (int upper : {0, 1}) out.push_back({k, {g, r, j}, {under, dir, upper}});
              }
            }
          }
        }
      }
      break;
    case MoveKind::SlideAdd:
    case MoveKind::SlideRemove:
      for (int r : {1, 2}) {
        for (int up : {0, 1}) out.push_back({k, {r, up}, {}});
      }
      break;
  }
  return out;
}

std::vector<std::pair<Move, RailKnotoidDiagram>> applicable(const RailKnotoidDiagram& d, MoveKind k) {
  Site s(d);
  std::vector<std::pair<Move, RailKnotoidDiagram>> out;
  for (auto& m : proposals(s, k)) {
    Outcome o = attempt(s, m);
    if (o.diagram) out.emplace_back(std::move(m), std::move(*o.diagram));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
            out.end());
  return out;
}

int added_crossings(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add:
    case MoveKind::SlideAdd:
      return 1;
    case MoveKind::R2Add:
    case MoveKind::RailR2Add:
      return 2;
    default:
      return 0;
  }
}

}  // namespace

std::string_view name(MoveKind k) {
  for (const auto& [kind, text] : kNames) {
    if (kind == k) return text;
  }
  return "?";
}

std::optional<MoveKind> parse_move_kind(std::string_view s) {
  for (const auto& [kind, text] : kNames) {
    if (text == s) return kind;
  }
  return std::nullopt;
}

const std::set<MoveKind>& all_move_kinds() {
  static const std::set<MoveKind> all = [] {
    std::set<MoveKind> k;
    for (const auto& [kind, text] : kNames) k.insert(kind);
    return k;
  }();
  return all;
}

const std::set<MoveKind>& regular_move_kinds() {
  static const std::set<MoveKind> regular = [] {
    std::set<MoveKind> k = all_move_kinds();
    k.erase(MoveKind::R1Add);
    k.erase(MoveKind::R1Remove);
    return k;
  }();
  return regular;
}

bool is_add(MoveKind k) { return added_crossings(k) > 0; }

std::string describe(const Move& m) {
  auto list = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  return std::string(name(m.kind)) + " site=" + list(m.site) + " params=" + list(m.params);
}

std::vector<Move> enumerate_moves(const RailKnotoidDiagram& d, const std::set<MoveKind>& kinds) {
  require_valid(d);
  std::vector<Move> out;
  for (MoveKind k : kinds) {
    for (auto& [m, result] : applicable(d, k)) out.push_back(std::move(m));
  }
  return out;
}

RailKnotoidDiagram apply_move(const RailKnotoidDiagram& d, const Move& m) {
  require_valid(d);
  Site s(d);
  Outcome o = attempt(s, m);
  if (!o.diagram) throw UsageError(describe(m) + " does not apply: " + o.failure);
  return std::move(*o.diagram);
}

RailKnotoidDiagram random_walk(const RailKnotoidDiagram& d, const WalkSpec& w, std::vector<Move>* trace) {
  if (w.steps < 0) throw UsageError("walk length must be non-negative");
  require_valid(d);
  std::mt19937_64 rng(w.seed);
  const auto& kinds = w.regular_only ? regular_move_kinds() : all_move_kinds();
  RailKnotoidDiagram cur = d;
  for (int step = 0; step < w.steps; ++step) {
    // Drawing kinds uniformly and discarding empty ones is uniform over the
    // kinds that have a move.
    std::vector<MoveKind> pool(kinds.begin(), kinds.end());
    while (!pool.empty()) {
      const std::size_t pick = static_cast<std::size_t>(rng() % pool.size());
      const MoveKind k = pool[pick];
      std::vector<std::pair<Move, RailKnotoidDiagram>> moves;
      if (!w.max_crossings || cur.crossing_count() + added_crossings(k) <= *w.max_crossings) {
        moves = applicable(cur, k);
      }
      if (moves.empty()) {
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        continue;
      }
      auto& chosen = moves[static_cast<std::size_t>(rng() % moves.size())];
      if (trace) trace->push_back(chosen.first);
      cur = std::move(chosen.second);
      break;
    }
  }
  return cur;
}

RailKnotoidDiagram simplify(const RailKnotoidDiagram& d) {
  require_valid(d);
  static const std::array<MoveKind, 4> removing{MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::RailR2Remove,
                                                MoveKind::SlideRemove};
  RailKnotoidDiagram cur = d;
  bool progress = true;
  while (progress) {
    progress = false;
    for (MoveKind k : removing) {
      auto moves = applicable(cur, k);
      if (moves.empty()) continue;
      cur = std::move(moves.front().second);
      progress = true;
      break;
    }
  }
  return cur;
}

}  // namespace railknot
