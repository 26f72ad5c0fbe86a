#include "link_code.hpp"

#include <algorithm>
#include <map>

namespace railknot::detail {

LinkCode LinkCode::from(const LinkDiagram& l) {
  std::map<int, int> dense;
  for (const auto& [id, s] : l.crossing_signs) {
    int next = static_cast<int>(dense.size());
    dense[id] = next;
  }
  LinkCode code;
  code.sign.assign(dense.size(), 0);
  for (const auto& [id, s] : l.crossing_signs) code.sign[static_cast<std::size_t>(dense[id])] = s;
  for (const auto& comp : l.components) {
    std::vector<Pass> c;
    c.reserve(comp.size());
    for (const auto& p : comp) c.push_back({dense.at(p.id), p.role == Role::Over});
    code.comps.push_back(std::move(c));
  }
  return code;
}

int LinkCode::crossings() const {
  int n = 0;
  for (const auto& c : comps) n += static_cast<int>(c.size());
  return n / 2;
}

int LinkCode::writhe() const {
  int w = 0;
  for (const auto& c : comps) {
    for (const auto& p : c) {
      if (p.over) w += sign[static_cast<std::size_t>(p.id)];
    }
  }
  return w;
}

std::pair<Location, Location> locate(const LinkCode& code, int c) {
  Location first{-1, -1}, second{-1, -1};
  for (int i = 0; i < code.components(); ++i) {
    const auto& comp = code.comps[static_cast<std::size_t>(i)];
    for (int k = 0; k < static_cast<int>(comp.size()); ++k) {
      if (comp[static_cast<std::size_t>(k)].id != c) continue;
      if (first.comp < 0) {
        first = {i, k};
      } else {
        second = {i, k};
      }
    }
  }
  return {first, second};
}

LinkCode switch_crossing(LinkCode code, int c) {
  for (auto& comp : code.comps) {
    for (auto& p : comp) {
      if (p.id == c) p.over = !p.over;
    }
  }
  code.sign[static_cast<std::size_t>(c)] = -code.sign[static_cast<std::size_t>(c)];
  return code;
}

namespace {

// Passes of comp strictly after index k, cyclically, up to (not including) k.
std::vector<Pass> after(const std::vector<Pass>& comp, int k) {
  std::vector<Pass> out;
  const int m = static_cast<int>(comp.size());
  for (int i = 1; i < m; ++i) out.push_back(comp[static_cast<std::size_t>((k + i) % m)]);
  return out;
}

std::vector<Pass> slice(const std::vector<Pass>& comp, int from, int to) {
  return {comp.begin() + from, comp.begin() + to};
}

// Replaces components i (and j, if different) by the given new ones.
LinkCode rebuild(const LinkCode& code, int i, int j, std::vector<std::vector<Pass>> fresh, int removed) {
  LinkCode out;
  out.sign = code.sign;
  out.sign[static_cast<std::size_t>(removed)] = 0;
  for (int k = 0; k < code.components(); ++k) {
    if (k == i) {
      for (auto& f : fresh) out.comps.push_back(std::move(f));
    } else if (k != j) {
      out.comps.push_back(code.comps[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

void flip_mixed_signs(LinkCode& code, const std::vector<Pass>& reversed) {
  std::vector<int> count(code.sign.size(), 0);
  for (const auto& p : reversed) count[static_cast<std::size_t>(p.id)]++;
  for (std::size_t id = 0; id < count.size(); ++id) {
    if (count[id] == 1) code.sign[id] = -code.sign[id];
  }
}

}  // namespace

LinkCode smooth_oriented(const LinkCode& code, int c) {
  auto [a, b] = locate(code, c);
  const auto& si = code.comps[static_cast<std::size_t>(a.comp)];
  if (a.comp == b.comp) {
    std::vector<Pass> outer = slice(si, b.index + 1, static_cast<int>(si.size()));
    auto head = slice(si, 0, a.index);
    outer.insert(outer.end(), head.begin(), head.end());
    std::vector<Pass> inner = slice(si, a.index + 1, b.index);
    return rebuild(code, a.comp, a.comp, {std::move(outer), std::move(inner)}, c);
  }
  const auto& sj = code.comps[static_cast<std::size_t>(b.comp)];
  std::vector<Pass> merged = after(si, a.index);
  auto tail = after(sj, b.index);
  merged.insert(merged.end(), tail.begin(), tail.end());
  return rebuild(code, a.comp, b.comp, {std::move(merged)}, c);
}

LinkCode smooth_unoriented(const LinkCode& code, int c) {
  auto [a, b] = locate(code, c);
  const auto& si = code.comps[static_cast<std::size_t>(a.comp)];
  std::vector<Pass> merged;
  std::vector<Pass> reversed;
  if (a.comp == b.comp) {
    merged = slice(si, b.index + 1, static_cast<int>(si.size()));
    auto head = slice(si, 0, a.index);
    merged.insert(merged.end(), head.begin(), head.end());
    reversed = slice(si, a.index + 1, b.index);
  } else {
    merged = after(si, a.index);
    reversed = after(code.comps[static_cast<std::size_t>(b.comp)], b.index);
  }
  std::reverse(reversed.begin(), reversed.end());
  merged.insert(merged.end(), reversed.begin(), reversed.end());
  LinkCode out = rebuild(code, a.comp, b.comp, {std::move(merged)}, c);
  flip_mixed_signs(out, reversed);
  return out;
}

int strip_kinks(LinkCode& code) {
  int total = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& comp : code.comps) {
      const int m = static_cast<int>(comp.size());
      for (int i = 0; i < m && m >= 2; ++i) {
        int j = (i + 1) % m;
        int id = comp[static_cast<std::size_t>(i)].id;
        if (comp[static_cast<std::size_t>(j)].id != id) continue;
        total += code.sign[static_cast<std::size_t>(id)];
        code.sign[static_cast<std::size_t>(id)] = 0;
        if (j == 0) {
          comp.erase(comp.begin() + i);
          comp.erase(comp.begin());
        } else {
          comp.erase(comp.begin() + i, comp.begin() + i + 2);
        }
        changed = true;
        break;
      }
    }
  }
  return total;
}

int first_non_descending(const LinkCode& code) {
  std::vector<char> seen(code.sign.size(), 0);
  for (const auto& comp : code.comps) {
    for (const auto& p : comp) {
      auto& s = seen[static_cast<std::size_t>(p.id)];
      if (!s && !p.over) return p.id;
      s = 1;
    }
  }
  return -1;
}

std::pair<LinkCode, std::string> canonical(const LinkCode& code) {
  std::vector<const std::vector<Pass>*> order;
  for (const auto& c : code.comps) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* x, const auto* y) { return x->size() > y->size(); });

  std::vector<int> label(code.sign.size(), -1);
  int next_label = 0;
  LinkCode out;
  std::string key;
  for (const auto* comp : order) {
    const int m = static_cast<int>(comp->size());
    std::vector<int> best;
    int best_rot = 0;
    for (int r = 0; r < m; ++r) {
      std::vector<int> tokens;
      tokens.reserve(static_cast<std::size_t>(m));
      std::vector<std::pair<int, int>> provisional;
      int fresh = next_label;
      for (int i = 0; i < m; ++i) {
        const Pass& p = (*comp)[static_cast<std::size_t>((r + i) % m)];
        int lab = label[static_cast<std::size_t>(p.id)];
        if (lab < 0) {
          auto it = std::find_if(provisional.begin(), provisional.end(),
                                 [&](const auto& pr) { return pr.first == p.id; });
          if (it == provisional.end()) {
            provisional.emplace_back(p.id, fresh);
            lab = fresh++;
          } else {
            lab = it->second;
          }
        }
        tokens.push_back(lab * 4 + (p.over ? 2 : 0) + (code.sign[static_cast<std::size_t>(p.id)] > 0 ? 1 : 0));
      }
      if (r == 0 || tokens < best) {
        best = std::move(tokens);
        best_rot = r;
      }
    }
    std::vector<Pass> rotated;
    for (int i = 0; i < m; ++i) {
      const Pass& p = (*comp)[static_cast<std::size_t>((best_rot + i) % m)];
      if (label[static_cast<std::size_t>(p.id)] < 0) label[static_cast<std::size_t>(p.id)] = next_label++;
      rotated.push_back({label[static_cast<std::size_t>(p.id)], p.over});
    }
    key += std::to_string(m) + ':';
    for (int t : best) key += std::to_string(t) + ',';
    key += ';';
    out.comps.push_back(std::move(rotated));
  }
  out.sign.assign(static_cast<std::size_t>(next_label), 0);
  for (std::size_t id = 0; id < label.size(); ++id) {
    if (label[id] >= 0) out.sign[static_cast<std::size_t>(label[id])] = code.sign[id];
  }
  return {std::move(out), std::move(key)};
}

}  // namespace railknot::detail
