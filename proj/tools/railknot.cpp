// railknot: command-line access to rail knotoid diagrams and their invariants.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "railknot/closure.hpp"
#include "railknot/diagram.hpp"
#include "railknot/errors.hpp"
#include "railknot/invariants.hpp"
#include "railknot/moves.hpp"

using namespace railknot;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr int kDistinguished = 3;
constexpr int kResource = 4;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

int report(const char* kind, const std::string& message, int code, nlohmann::ordered_json extra = {}) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  if (extra.is_object()) {
    for (auto& [k, v] : extra.items()) j[k] = v;
  }
  std::cerr << j.dump() << std::endl;
  return code;
}

std::vector<ClosureSide> sides_of(const std::string& side) {
  if (side == "over") return {ClosureSide::Over};
  if (side == "under") return {ClosureSide::Under};
  return {ClosureSide::Over, ClosureSide::Under};
}

const char* letter(ClosureSide s) { return s == ClosureSide::Over ? "o" : "u"; }

struct InvariantRequest {
  std::string file;
  std::string side = "both";
  std::string orient = "plus";
  std::string family = "all";
  bool selected = false;
};

std::string selected_invariants(const RailKnotoidDiagram& d, const InvariantRequest& q, const Limits& limits) {
  const Orientation o = q.orient == "minus" ? Orientation::Minus : Orientation::Plus;
  const std::string suffix = q.orient == "minus" ? "_minus" : "_plus";
  auto wants = [&](const char* f) { return q.family == "all" || q.family == f; };
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (ClosureSide side : sides_of(q.side)) {
    const std::string s = letter(side);
    if (wants("bracket")) j["bracket_" + s] = to_string(rail_bracket(d, side, limits));
    if (q.family == "all") j["writhe_" + s + suffix] = writhe(orient(companion(d, side), o));
    if (wants("x")) j["x_" + s + suffix] = to_string(rail_invariant(d, Family::X, side, o, limits));
    if (wants("jones")) j["jones_" + s + suffix] = to_string(rail_invariant(d, Family::Jones, side, o, limits));
    if (wants("homflypt")) j["homfly_" + s + suffix] = to_string(rail_invariant(d, Family::Homflypt, side, o, limits));
    if (wants("kauffman")) j["kauffman_" + s] = to_string(rail_kauffman(d, side, limits));
  }
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rail knotoid diagrams: validation, moves, companion closures and invariants"};
  app.require_subcommand(1);

  std::optional<int> max_crossings;
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--max-crossings", max_crossings, "Crossing bound for the invariant computations")
        ->check(CLI::Range(0, 64));
  };

  std::string file, file_b;
  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram file against the structural invariants");
  validate_cmd->add_option("file", file, "Diagram JSON ('-' for stdin)")->required();

  InvariantRequest inv;
  auto* inv_cmd = app.add_subcommand("invariants", "Print the invariant certificate or selected invariants");
  inv_cmd->add_option("file", inv.file, "Diagram JSON ('-' for stdin)")->required();
  auto* side_opt = inv_cmd->add_option("--side", inv.side)->check(CLI::IsMember({"over", "under", "both"}));
  auto* orient_opt = inv_cmd->add_option("--orient", inv.orient)->check(CLI::IsMember({"plus", "minus"}));
  auto* family_opt = inv_cmd->add_option("--family", inv.family)
                         ->check(CLI::IsMember({"bracket", "x", "jones", "homflypt", "kauffman", "all"}));
  add_bound(inv_cmd);

  std::string closure_side = "both";
  bool forget_rails = false;
  auto* closure_cmd = app.add_subcommand("closure", "Print the companion loop (or forget-rails closure) as a Gauss code");
  closure_cmd->add_option("file", file, "Diagram JSON ('-' for stdin)")->required();
  closure_cmd->add_option("--side", closure_side)->check(CLI::IsMember({"over", "under", "both"}));
  closure_cmd->add_flag("--forget-rails", forget_rails, "Close over or under everything, ignoring rail flags");

  bool compare_regular = false;
  auto* compare_cmd = app.add_subcommand("compare", "Try to distinguish two diagrams by their invariants");
  compare_cmd->add_option("file_a", file, "First diagram JSON")->required();
  compare_cmd->add_option("file_b", file_b, "Second diagram JSON")->required();
  compare_cmd->add_flag("--regular", compare_regular, "Also compare the brackets and writhes");
  add_bound(compare_cmd);

  WalkSpec walk;
  auto* perturb_cmd = app.add_subcommand("perturb", "Apply a seeded random walk of moves");
  perturb_cmd->add_option("file", file, "Diagram JSON ('-' for stdin)")->required();
  perturb_cmd->add_option("--steps", walk.steps)->check(CLI::NonNegativeNumber);
  perturb_cmd->add_option("--seed", walk.seed);
  perturb_cmd->add_flag("--regular", walk.regular_only, "Exclude R1 moves");
  perturb_cmd->add_option("--max-crossings", max_crossings, "Largest crossing count the walk may reach")
      ->check(CLI::Range(0, 64));

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report("usage", e.what(), kUsage);
  }

  try {
    Limits limits = Limits::from_environment();
    if (max_crossings) limits = Limits::uniform(*max_crossings);

    if (validate_cmd->parsed()) {
      const auto d = parse_diagram_unchecked(read_input(file));
      const auto v = validate(d);
      if (v.empty()) {
        std::cout << "OK" << std::endl;
        return kOk;
      }
      std::cout << to_string(v);
      return kInvalid;
    }

    if (inv_cmd->parsed()) {
      const auto d = parse_diagram(read_input(inv.file));
      inv.selected = side_opt->count() + orient_opt->count() + family_opt->count() > 0;
      std::cout << (inv.selected ? selected_invariants(d, inv, limits) : certificate(d, limits).to_json());
      return kOk;
    }

    if (closure_cmd->parsed()) {
      const auto d = parse_diagram(read_input(file));
      const auto sides = sides_of(closure_side);
      for (ClosureSide side : sides) {
        const LinkDiagram l = forget_rails ? forget_rails_closure(d, side) : companion(d, side);
        if (sides.size() > 1) std::cout << (side == ClosureSide::Over ? "over: " : "under: ");
        std::cout << render_gauss(l) << "\n";
      }
      return kOk;
    }

    if (compare_cmd->parsed()) {
      const auto a = parse_diagram(read_input(file));
      const auto b = parse_diagram(read_input(file_b));
      const Verdict v = compare(a, b, compare_regular, limits);
      if (!v.distinguished()) {
        std::cout << "INDISTINGUISHABLE" << std::endl;
        return kOk;
      }
      std::cout << "DISTINGUISHED:";
      for (std::size_t i = 0; i < v.differing_fields.size(); ++i) {
        std::cout << (i ? ", " : " ") << v.differing_fields[i];
      }
      std::cout << std::endl;
      return kDistinguished;
    }

    if (perturb_cmd->parsed()) {
      const auto d = parse_diagram(read_input(file));
      // Keep the result within reach of every invariant by default.
      walk.max_crossings = max_crossings ? *max_crossings : std::max(limits.kauffman, d.crossing_count());
      std::cout << serialize_diagram(random_walk(d, walk));
      return kOk;
    }

    if (selftest_cmd->parsed()) {
      bool all = true;
      for (const auto& r : acceptance::run_all()) {
        std::cout << acceptance::format(r) << std::endl;
        all = all && r.passed;
      }
      return all ? kOk : kInvalid;
    }
  } catch (const ParseError& e) {
    return report("parse", e.what(), kUsage);
  } catch (const UsageError& e) {
    return report("usage", e.what(), kUsage);
  } catch (const ResourceError& e) {
    return report("resource", e.what(), kResource, {{"crossings", e.crossings()}, {"bound", e.bound()}});
  }
  return kUsage;
}
