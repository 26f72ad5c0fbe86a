#include "railknot/embedding.hpp"

#include <algorithm>
#include <map>

namespace railknot {

bool Embedding::is_face(std::vector<int> edges) const {
  std::sort(edges.begin(), edges.end());
  for (const auto& f : faces_) {
    if (f.size() != edges.size()) continue;
    std::vector<int> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == edges) return true;
  }
  return false;
}

namespace {

// Half-edge 2e is the tail end of edge e, 2e+1 its head end.
int tail(int e) { return 2 * e; }
int head(int e) { return 2 * e + 1; }

struct Frame {
  int n = 0;
  int len1 = 0, len2 = 0;
  int base1 = 0, base2 = 0;
  int edges = 0;
  std::vector<std::vector<int>> fixed_rotations;  // everything except leg and head
  int leg_rail_in = 0, leg_rail_out = 0;
  int head_rail_in = 0, head_rail_out = 0;
};

Frame build_frame(const RailKnotoidDiagram& d) {
  Frame f;
  f.n = static_cast<int>(d.arc_events.size());
  f.len1 = static_cast<int>(d.rail(1).size());
  f.len2 = static_cast<int>(d.rail(2).size());
  f.base1 = f.n + 1;
  f.base2 = f.base1 + f.len1 + 1;
  f.edges = f.base2 + f.len2 + 1;

  std::map<int, int> over_pos, under_pos, rail_arc_pos;
  for (int p = 0; p < f.n; ++p) {
    const auto& e = d.arc_events[static_cast<std::size_t>(p)];
    if (e.is_self()) {
      (e.role == Role::Over ? over_pos : under_pos)[e.id] = p;
    } else {
      rail_arc_pos[e.id] = p;
    }
  }

  for (const auto& [id, sign] : d.self_crossings) {
    int po = over_pos.at(id), pu = under_pos.at(id);
    int over_in = head(po), over_out = tail(po + 1);
    int under_in = head(pu), under_out = tail(pu + 1);
    if (sign > 0) {
      f.fixed_rotations.push_back({over_out, under_out, over_in, under_in});
    } else {
      f.fixed_rotations.push_back({over_out, under_in, over_in, under_out});
    }
  }

  for (int r = 1; r <= 2; ++r) {
    int base = r == 1 ? f.base1 : f.base2;
    const auto& items = d.rail(r);
    for (int j = 0; j < static_cast<int>(items.size()); ++j) {
      int rail_in = head(base + j), rail_out = tail(base + j + 1);
      const auto& it = items[static_cast<std::size_t>(j)];
      if (it.endpoint) {
        if (r == 1) {
          f.leg_rail_in = rail_in;
          f.leg_rail_out = rail_out;
        } else {
          f.head_rail_in = rail_in;
          f.head_rail_out = rail_out;
        }
        continue;
      }
      int p = rail_arc_pos.at(it.id);
      int arc_in = head(p), arc_out = tail(p + 1);
      if (it.dir == Direction::LeftToRight) {
        f.fixed_rotations.push_back({rail_out, arc_in, rail_in, arc_out});
      } else {
        f.fixed_rotations.push_back({rail_out, arc_out, rail_in, arc_in});
      }
    }
  }

  // Infinity: counterclockwise in a chart at infinity, the reverse of the
  // order in which a large circle meets the rail ends.
  f.fixed_rotations.push_back({head(f.base2 + f.len2), tail(f.base2), tail(f.base1),
                               head(f.base1 + f.len1)});
  return f;
}

}  // namespace

std::optional<Embedding> embed(const RailKnotoidDiagram& d) {
  const Frame f = build_frame(d);
  const int vertices = static_cast<int>(f.fixed_rotations.size()) + 2;
  const int half_edges = 2 * f.edges;

  for (Side leg : {Side::Right, Side::Left}) {
    for (Side hd : {Side::Left, Side::Right}) {
      std::vector<int> next(static_cast<std::size_t>(half_edges), -1);
      auto install = [&](const std::vector<int>& rot) {
        for (std::size_t i = 0; i < rot.size(); ++i) {
          next[static_cast<std::size_t>(rot[i])] = rot[(i + 1) % rot.size()];
        }
      };
      for (const auto& rot : f.fixed_rotations) install(rot);
      int leg_arc = tail(0);
      int head_arc = head(f.n);
      install(leg == Side::Right ? std::vector<int>{f.leg_rail_out, f.leg_rail_in, leg_arc}
                                 : std::vector<int>{f.leg_rail_out, leg_arc, f.leg_rail_in});
      install(hd == Side::Left ? std::vector<int>{f.head_rail_out, head_arc, f.head_rail_in}
                               : std::vector<int>{f.head_rail_out, f.head_rail_in, head_arc});

      std::vector<char> seen(static_cast<std::size_t>(half_edges), 0);
      std::vector<std::vector<int>> faces;
      for (int h0 = 0; h0 < half_edges; ++h0) {
        if (seen[static_cast<std::size_t>(h0)]) continue;
        std::vector<int> face;
        int h = h0;
        while (!seen[static_cast<std::size_t>(h)]) {
          seen[static_cast<std::size_t>(h)] = 1;
          face.push_back(h / 2);
          h = next[static_cast<std::size_t>(h ^ 1)];
        }
        faces.push_back(std::move(face));
      }
      if (vertices - f.edges + static_cast<int>(faces.size()) == 2) {
        Embedding emb;
        emb.leg_side_ = leg;
        emb.head_side_ = hd;
        emb.rail1_base_ = f.base1;
        emb.rail2_base_ = f.base2;
        emb.faces_ = std::move(faces);
        return emb;
      }
    }
  }
  return std::nullopt;
}

}  // namespace railknot
