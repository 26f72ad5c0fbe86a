#include "railknot/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "railknot/errors.hpp"

namespace railknot {

using nlohmann::json;

int RailKnotoidDiagram::endpoint_index(int r) const {
  const auto& items = rail(r);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].endpoint) return static_cast<int>(i);
  }
  return -1;
}

int RailKnotoidDiagram::max_id() const {
  int m = 0;
  for (const auto& [id, sign] : self_crossings) m = std::max(m, id);
  for (const auto& items : rails) {
    for (const auto& it : items) {
      if (!it.endpoint) m = std::max(m, it.id);
    }
  }
  for (const auto& e : arc_events) m = std::max(m, e.id);
  return m;
}

std::vector<Violation> validate(const RailKnotoidDiagram& d) {
  std::vector<Violation> out;
  auto report = [&](std::string loc, std::string msg) {
    out.push_back({std::move(loc), std::move(msg)});
  };

  for (const auto& [id, sign] : d.self_crossings) {
    if (sign != 1 && sign != -1) {
      report("self_crossings." + std::to_string(id), "sign must be +1 or -1");
    }
  }

  std::map<int, int> over_count, under_count;
  std::map<int, int> rail_pass_count;
  std::map<int, int> rail_pass_rail;
  for (std::size_t i = 0; i < d.arc_events.size(); ++i) {
    const auto& e = d.arc_events[i];
    if (e.is_self()) {
      (e.role == Role::Over ? over_count : under_count)[e.id]++;
      if (!d.self_crossings.count(e.id)) {
        report("arc_events[" + std::to_string(i) + "]",
               "self crossing " + std::to_string(e.id) + " has no sign");
      }
    } else {
      if (e.rail != 1 && e.rail != 2) {
        report("arc_events[" + std::to_string(i) + "]", "rail must be 1 or 2");
      }
      rail_pass_count[e.id]++;
      rail_pass_rail[e.id] = e.rail;
    }
  }
  for (const auto& [id, sign] : d.self_crossings) {
    int o = over_count.count(id) ? over_count[id] : 0;
    int u = under_count.count(id) ? under_count[id] : 0;
    if (o != 1 || u != 1) {
      report("self crossing " + std::to_string(id),
             "must occur once Over and once Under in arc_events (found " + std::to_string(o) +
                 " Over, " + std::to_string(u) + " Under)");
    }
  }

  std::map<int, int> rail_item_count;
  std::map<int, int> rail_item_rail;
  for (int r = 1; r <= 2; ++r) {
    int endpoints = 0;
    for (const auto& it : d.rail(r)) {
      if (it.endpoint) {
        ++endpoints;
      } else {
        rail_item_count[it.id]++;
        rail_item_rail[it.id] = r;
      }
    }
    if (endpoints != 1) {
      report("rail" + std::to_string(r),
             "must contain exactly one endpoint (found " + std::to_string(endpoints) + ")");
    }
  }
  std::set<int> rail_ids;
  for (const auto& [id, n] : rail_pass_count) rail_ids.insert(id);
  for (const auto& [id, n] : rail_item_count) rail_ids.insert(id);
  for (int id : rail_ids) {
    int passes = rail_pass_count.count(id) ? rail_pass_count[id] : 0;
    int items = rail_item_count.count(id) ? rail_item_count[id] : 0;
    std::string loc = "rail crossing " + std::to_string(id);
    if (passes != 1) {
      report(loc, "must occur exactly once in arc_events (found " + std::to_string(passes) + ")");
    }
    if (items != 1) {
      report(loc, "must occur exactly once in the rail orders (found " + std::to_string(items) + ")");
    }
    if (passes >= 1 && items >= 1 && rail_pass_rail[id] != rail_item_rail[id]) {
      report(loc, "arc event names rail " + std::to_string(rail_pass_rail[id]) +
                      " but the crossing sits on rail " + std::to_string(rail_item_rail[id]));
    }
    if (d.self_crossings.count(id) || over_count.count(id) || under_count.count(id)) {
      report(loc, "id is also used by a self crossing");
    }
  }
  return out;
}

std::vector<Violation> validate(const LinkDiagram& l) {
  std::vector<Violation> out;
  std::map<int, int> over_count, under_count;
  for (std::size_t c = 0; c < l.components.size(); ++c) {
    for (const auto& p : l.components[c]) {
      (p.role == Role::Over ? over_count : under_count)[p.id]++;
      if (!l.crossing_signs.count(p.id)) {
        out.push_back({"component " + std::to_string(c),
                       "crossing " + std::to_string(p.id) + " has no sign"});
      }
    }
  }
  for (const auto& [id, sign] : l.crossing_signs) {
    if (sign != 1 && sign != -1) {
      out.push_back({"crossing " + std::to_string(id), "sign must be +1 or -1"});
    }
    int o = over_count.count(id) ? over_count[id] : 0;
    int u = under_count.count(id) ? under_count[id] : 0;
    if (o != 1 || u != 1) {
      out.push_back({"crossing " + std::to_string(id), "must occur once Over and once Under"});
    }
  }
  if (l.components.empty()) out.push_back({"components", "a link needs at least one component"});
  return out;
}

std::string to_string(const std::vector<Violation>& v) {
  std::string s;
  for (const auto& x : v) s += x.location + ": " + x.message + "\n";
  return s;
}

void require_valid(const RailKnotoidDiagram& d) {
  auto v = validate(d);
  if (!v.empty()) throw UsageError("invalid rail knotoid diagram:\n" + to_string(v));
}

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    if (!ok) throw ParseError("unknown field '" + key + "' in " + where);
  }
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + " must be an integer");
  return j.get<int>();
}

RailItem parse_rail_item(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() != "endpoint") throw ParseError(where + ": expected \"endpoint\"");
    return RailItem::make_endpoint();
  }
  if (!j.is_object()) throw ParseError(where + ": expected \"endpoint\" or an object");
  reject_unknown(j, {"id", "flag", "dir"}, where);
  if (!j.contains("id") || !j.contains("flag") || !j.contains("dir")) {
    throw ParseError(where + ": rail crossing needs id, flag and dir");
  }
  std::string flag = j["flag"].is_string() ? j["flag"].get<std::string>() : "";
  std::string dir = j["dir"].is_string() ? j["dir"].get<std::string>() : "";
  if (flag != "over" && flag != "under") throw ParseError(where + ": flag must be over|under");
  if (dir != "l2r" && dir != "r2l") throw ParseError(where + ": dir must be l2r|r2l");
  return RailItem::crossing(as_int(j["id"], where + ".id"),
                            flag == "over" ? RailFlag::ArcOverRail : RailFlag::ArcUnderRail,
                            dir == "l2r" ? Direction::LeftToRight : Direction::RightToLeft);
}

}  // namespace

RailKnotoidDiagram parse_diagram_unchecked(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("diagram document must be a JSON object");
  reject_unknown(doc, {"self_crossings", "arc_events", "rail1", "rail2"}, "diagram");
  for (const char* key : {"self_crossings", "arc_events", "rail1", "rail2"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  }

  RailKnotoidDiagram d;
  const json& sc = doc["self_crossings"];
  if (!sc.is_object()) throw ParseError("self_crossings must be an object id -> sign");
  for (const auto& [key, value] : sc.items()) {
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("self_crossings key '" + key + "' is not an integer id");
    }
    if (d.self_crossings.count(id)) {
      throw ParseError("duplicated crossing id " + std::to_string(id) + " in self_crossings");
    }
    d.self_crossings[id] = as_int(value, "self_crossings." + key);
  }

  const json& ev = doc["arc_events"];
  if (!ev.is_array()) throw ParseError("arc_events must be an array");
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const json& e = ev[i];
    std::string where = "arc_events[" + std::to_string(i) + "]";
    if (!e.is_object()) throw ParseError(where + " must be an object");
    if (e.contains("self")) {
      reject_unknown(e, {"self", "role"}, where);
      std::string role = e.contains("role") && e["role"].is_string() ? e["role"].get<std::string>() : "";
      if (role != "O" && role != "U") throw ParseError(where + ": role must be \"O\" or \"U\"");
      d.arc_events.push_back(
          ArcEvent::self_pass(as_int(e["self"], where + ".self"), role == "O" ? Role::Over : Role::Under));
    } else if (e.contains("rail")) {
      reject_unknown(e, {"rail", "id"}, where);
      if (!e.contains("id")) throw ParseError(where + ": rail pass needs an id");
      d.arc_events.push_back(
          ArcEvent::rail_pass(as_int(e["rail"], where + ".rail"), as_int(e["id"], where + ".id")));
    } else {
      throw ParseError(where + ": expected a \"self\" or a \"rail\" event");
    }
  }

  for (int r = 1; r <= 2; ++r) {
    std::string key = "rail" + std::to_string(r);
    const json& arr = doc[key];
    if (!arr.is_array()) throw ParseError(key + " must be an array");
    d.rail(r).clear();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      d.rail(r).push_back(parse_rail_item(arr[i], key + "[" + std::to_string(i) + "]"));
    }
  }

  return d;
}

RailKnotoidDiagram parse_diagram(std::string_view text) {
  RailKnotoidDiagram d = parse_diagram_unchecked(text);
  auto violations = validate(d);
  if (!violations.empty()) {
    throw ParseError("diagram violates structural invariants:\n" + to_string(violations));
  }
  return d;
}

std::string serialize_diagram(const RailKnotoidDiagram& d) {
  std::ostringstream os;
  os << "{\n  \"self_crossings\": {";
  bool first = true;
  for (const auto& [id, sign] : d.self_crossings) {
    os << (first ? "" : ", ") << '"' << id << "\": " << sign;
    first = false;
  }
  os << "},\n  \"arc_events\": [";
  for (std::size_t i = 0; i < d.arc_events.size(); ++i) {
    const auto& e = d.arc_events[i];
    if (e.is_self()) {
      os << (i ? ", " : "") << "{\"self\": " << e.id << ", \"role\": \""
         << (e.role == Role::Over ? "O" : "U") << "\"}";
    } else {
      os << (i ? ", " : "") << "{\"rail\": " << e.rail << ", \"id\": " << e.id << "}";
    }
  }
  os << "]";
  for (int r = 1; r <= 2; ++r) {
    os << ",\n  \"rail" << r << "\": [";
    const auto& items = d.rail(r);
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& it = items[i];
      os << (i ? ", " : "");
      if (it.endpoint) {
        os << "\"endpoint\"";
      } else {
        os << "{\"id\": " << it.id << ", \"flag\": \""
           << (it.flag == RailFlag::ArcOverRail ? "over" : "under") << "\", \"dir\": \""
           << (it.dir == Direction::LeftToRight ? "l2r" : "r2l") << "\"}";
      }
    }
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

std::string render_gauss(const RailKnotoidDiagram& d) {
  std::map<int, RailItem> rail_items;
  for (const auto& items : d.rails) {
    for (const auto& it : items) {
      if (!it.endpoint) rail_items[it.id] = it;
    }
  }
  std::string out;
  for (const auto& e : d.arc_events) {
    if (!out.empty()) out += ' ';
    if (e.is_self()) {
      auto it = d.self_crossings.find(e.id);
      int sign = it == d.self_crossings.end() ? 0 : it->second;
      out += (e.role == Role::Over ? "O" : "U") + std::to_string(e.id) +
             (sign > 0 ? "+" : sign < 0 ? "-" : "?");
    } else {
      out += "R" + std::to_string(e.rail);
      auto it = rail_items.find(e.id);
      if (it == rail_items.end()) {
        out += "?";
      } else {
        out += it->second.flag == RailFlag::ArcOverRail ? "o" : "u";
        out += it->second.dir == Direction::LeftToRight ? "→" : "←";
      }
    }
  }
  return out;
}

std::string render_gauss(const LinkDiagram& l) {
  std::string out;
  for (std::size_t c = 0; c < l.components.size(); ++c) {
    if (c) out += " | ";
    if (l.components[c].empty()) {
      out += "()";
      continue;
    }
    for (std::size_t i = 0; i < l.components[c].size(); ++i) {
      const auto& p = l.components[c][i];
      auto it = l.crossing_signs.find(p.id);
      int sign = it == l.crossing_signs.end() ? 0 : it->second;
      if (i) out += ' ';
      out += (p.role == Role::Over ? "O" : "U") + std::to_string(p.id) +
             (sign > 0 ? "+" : sign < 0 ? "-" : "?");
    }
  }
  return out;
}

}  // namespace railknot
