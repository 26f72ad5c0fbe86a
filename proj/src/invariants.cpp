#include "railknot/invariants.hpp"

#include <cstdlib>
#include <unordered_map>

#include <json.hpp>

#include "link_code.hpp"
#include "railknot/union_find.hpp"

namespace railknot {

using detail::LinkCode;

Limits Limits::from_environment() {
  const char* env = std::getenv("RAILKNOT_MAX_CROSSINGS");
  if (env == nullptr || *env == '\0') return {};
  char* end = nullptr;
  long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 0 || n > 64) {
    throw UsageError(std::string("RAILKNOT_MAX_CROSSINGS must be an integer in [0, 64], got '") +
                     env + "'");
  }
  return uniform(static_cast<int>(n));
}

namespace {

void check_bound(const char* what, int crossings, int bound) {
  if (crossings > bound) {
    throw ResourceError(std::string(what) + ": " + std::to_string(crossings) +
                            " crossings exceed the bound " + std::to_string(bound),
                        crossings, bound);
  }
}

void check_link(const LinkDiagram& l) {
  auto v = validate(l);
  if (!v.empty()) throw UsageError("invalid link diagram:\n" + to_string(v));
}

Laurent1 delta() {
  return Laurent1::monomial(kVarA, {2}, -1) + Laurent1::monomial(kVarA, {-2}, -1);
}

// Exact quotient of Laurent polynomials in one variable; the divisor's
// extreme coefficients must be units.
Laurent1 divide_exact(const Laurent1& num, const Laurent1& den) {
  if (num.is_zero()) return num;
  const int num_low = num.terms().begin()->first[0];
  const int den_low = den.terms().begin()->first[0];
  const int den_high = den.terms().rbegin()->first[0] - den_low;
  const Integer lead = den.terms().rbegin()->second;
  Laurent1 rem = num.shifted({-num_low});
  Laurent1 quotient(num.variables());
  Laurent1 d = den.shifted({-den_low});
  while (!rem.is_zero()) {
    auto [e, c] = *rem.terms().rbegin();
    int k = e[0] - den_high;
    if (k < 0 || c % lead != 0) throw UsageError("polynomial specialization is not exact");
    Laurent1 q = Laurent1::monomial(num.variables(), {k}, c / lead);
    quotient += q;
    rem -= q * d;
  }
  return quotient.shifted({num_low - den_low});
}

class HomflyEngine {
 public:
  Laurent2 eval(LinkCode code) {
    detail::strip_kinks(code);
    if (code.crossings() == 0) return unlink(code.components());
    // The key ignores basepoints; the recursion keeps them so that switching
    // always moves towards the descending diagram.
    std::string key = detail::canonical(code).second;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const LinkCode& canon = code;

    Laurent2 result(kVarsLM);
    int c = detail::first_non_descending(canon);
    if (c < 0) {
      result = unlink(canon.components());
    } else {
      int eps = canon.sign[static_cast<std::size_t>(c)];
      Laurent2 switched = eval(detail::switch_crossing(canon, c));
      Laurent2 smoothed = eval(detail::smooth_oriented(canon, c));
      // l P+ + l^-1 P- + m P0 = 0, solved for the sign at hand.
      if (eps > 0) {
        result = -switched.shifted({-2, 0}) - smoothed.shifted({-1, 1});
      } else {
        result = -switched.shifted({2, 0}) - smoothed.shifted({1, 1});
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  Laurent2 unlink(int k) {
    // (-(l + l^-1) / m)^(k-1)
    Laurent2 factor = Laurent2::monomial(kVarsLM, {1, -1}, -1) + Laurent2::monomial(kVarsLM, {-1, -1}, -1);
    return power(factor, k - 1);
  }

  std::unordered_map<std::string, Laurent2> memo_;
};

class KauffmanEngine {
 public:
  Laurent2 eval(LinkCode code) {
    int curls = detail::strip_kinks(code);
    Laurent2 factor = Laurent2::monomial(kVarsAZ, {curls, 0});
    if (code.crossings() == 0) return factor * unlink(code.components());
    std::string key = detail::canonical(code).second;
    if (auto it = memo_.find(key); it != memo_.end()) return factor * it->second;
    const LinkCode& canon = code;

    Laurent2 result(kVarsAZ);
    int c = detail::first_non_descending(canon);
    if (c < 0) {
      result = unlink(canon.components()).shifted({canon.writhe(), 0});
    } else {
      Laurent2 switched = eval(detail::switch_crossing(canon, c));
      Laurent2 zero = eval(detail::smooth_oriented(canon, c));
      Laurent2 inf = eval(detail::smooth_unoriented(canon, c));
      result = (zero + inf).shifted({0, 1}) - switched;
    }
    memo_.emplace(std::move(key), result);
    return factor * result;
  }

 private:
  Laurent2 unlink(int k) {
    // mu = (a + a^-1) / z - 1
    Laurent2 mu = Laurent2::monomial(kVarsAZ, {1, -1}) + Laurent2::monomial(kVarsAZ, {-1, -1}) -
                  Laurent2::constant(kVarsAZ, 1);
    return power(mu, k - 1);
  }

  std::unordered_map<std::string, Laurent2> memo_;
};

}  // namespace

int writhe(const LinkDiagram& l) {
  int w = 0;
  for (const auto& [id, s] : l.crossing_signs) w += s;
  return w;
}

Laurent1 bracket(const LinkDiagram& l, const Limits& limits) {
  check_link(l);
  const LinkCode code = LinkCode::from(l);
  const int n = code.crossings();
  check_bound("bracket", n, limits.bracket);

  // Segment k of a component leaves its pass k.
  int segments = 0;
  int empty_components = 0;
  std::vector<int> over_in(static_cast<std::size_t>(n)), over_out(static_cast<std::size_t>(n));
  std::vector<int> under_in(static_cast<std::size_t>(n)), under_out(static_cast<std::size_t>(n));
  for (const auto& comp : code.comps) {
    const int m = static_cast<int>(comp.size());
    if (m == 0) ++empty_components;
    for (int k = 0; k < m; ++k) {
      const auto& p = comp[static_cast<std::size_t>(k)];
      int in = segments + (k + m - 1) % m;
      int out = segments + k;
      (p.over ? over_in : under_in)[static_cast<std::size_t>(p.id)] = in;
      (p.over ? over_out : under_out)[static_cast<std::size_t>(p.id)] = out;
    }
    segments += m;
  }

  // counts[b][loops]: states with b B-smoothings and the given loop count.
  const int max_loops = n + empty_components + 1;
  std::vector<std::vector<long long>> counts(static_cast<std::size_t>(n + 1),
                                             std::vector<long long>(static_cast<std::size_t>(max_loops + 1), 0));
  UnionFind uf;
  const unsigned long long states = 1ULL << n;
  for (unsigned long long s = 0; s < states; ++s) {
    uf.reset(segments);
    int b = 0;
    for (int c = 0; c < n; ++c) {
      bool b_smoothing = (s >> c) & 1ULL;
      b += b_smoothing;
      bool oriented = (code.sign[static_cast<std::size_t>(c)] > 0) != b_smoothing;
      auto i = static_cast<std::size_t>(c);
      if (oriented) {
        uf.unite(over_in[i], under_out[i]);
        uf.unite(under_in[i], over_out[i]);
      } else {
        uf.unite(over_in[i], under_in[i]);
        uf.unite(over_out[i], under_out[i]);
      }
    }
    counts[static_cast<std::size_t>(b)][static_cast<std::size_t>(uf.classes() + empty_components)]++;
  }

  std::vector<Laurent1> delta_pow{Laurent1::constant(kVarA, 1)};
  for (int k = 1; k <= max_loops; ++k) delta_pow.push_back(delta_pow.back() * delta());
  Laurent1 result(kVarA);
  for (int b = 0; b <= n; ++b) {
    for (int loops = 1; loops <= max_loops; ++loops) {
      long long cnt = counts[static_cast<std::size_t>(b)][static_cast<std::size_t>(loops)];
      if (cnt == 0) continue;
      result += delta_pow[static_cast<std::size_t>(loops - 1)].shifted({n - 2 * b}) *
                Laurent1::constant(kVarA, cnt);
    }
  }
  return result;
}

Laurent1 normalized_bracket(const LinkDiagram& l, const Limits& limits) {
  return power(Laurent1::monomial(kVarA, {3}, -1), -writhe(l)) * bracket(l, limits);
}

Laurent1 jones(const LinkDiagram& l, const Limits& limits) {
  return substitute_A_to_t(normalized_bracket(l, limits));
}

Laurent2 homflypt(const LinkDiagram& l, const Limits& limits) {
  check_link(l);
  check_bound("homflypt", l.crossing_count(), limits.homflypt);
  HomflyEngine engine;
  return engine.eval(LinkCode::from(l));
}

Laurent2 kauffman_f(const LinkDiagram& l, const Limits& limits) {
  check_link(l);
  check_bound("kauffman", l.crossing_count(), limits.kauffman);
  KauffmanEngine engine;
  return engine.eval(LinkCode::from(l)).shifted({-writhe(l), 0});
}

Laurent1 jones_from_homflypt(const Laurent2& p) {
  p.require_same_variables(Laurent2(kVarsLM));
  // D = t^-1/2 - t^1/2 on the quarter grid.
  const Laurent1 d = Laurent1::monomial(kVarT, {-2}) - Laurent1::monomial(kVarT, {2});
  int shift = 0;
  for (const auto& [e, c] : p.terms()) shift = std::max(shift, -e[1]);
  Laurent1 numerator(kVarT);
  for (const auto& [e, c] : p.terms()) {
    const int a = e[0], b = e[1];
    if ((a + b) % 2 != 0) throw UsageError("HOMFLYPT term with l- and m-degrees of unequal parity");
    Integer sign = ((a + b) / 2) % 2 == 0 ? 1 : -1;
    numerator += power(d, b + shift).shifted({-4 * a}) * Laurent1::constant(kVarT, sign * c);
  }
  return divide_exact(numerator, power(d, shift));
}

Laurent1 normalized_bracket_from_kauffman(const Laurent2& f) {
  f.require_same_variables(Laurent2(kVarsAZ));
  const Laurent1 z = Laurent1::monomial(kVarA, {1}) + Laurent1::monomial(kVarA, {-1});
  int shift = 0;
  for (const auto& [e, c] : f.terms()) shift = std::max(shift, -e[1]);
  Laurent1 numerator(kVarA);
  for (const auto& [e, c] : f.terms()) {
    Integer sign = e[0] % 2 == 0 ? 1 : -1;
    numerator += power(z, e[1] + shift).shifted({3 * e[0]}) * Laurent1::constant(kVarA, sign * c);
  }
  return divide_exact(numerator, power(z, shift));
}

std::string to_string(const Polynomial& p) {
  return std::visit([](const auto& q) { return railknot::to_string(q); }, p);
}

Laurent1 rail_bracket(const RailKnotoidDiagram& d, ClosureSide side, const Limits& limits) {
  return bracket(companion(d, side), limits);
}

Polynomial rail_invariant(const RailKnotoidDiagram& d, Family family, ClosureSide side,
                          Orientation o, const Limits& limits) {
  LinkDiagram k = orient(companion(d, side), o);
  switch (family) {
    case Family::X:
      return normalized_bracket(k, limits);
    case Family::Jones:
      return jones(k, limits);
    case Family::Homflypt:
      return homflypt(k, limits);
  }
  throw UsageError("unknown invariant family");
}

Laurent2 rail_kauffman(const RailKnotoidDiagram& d, ClosureSide side, const Limits& limits) {
  return kauffman_f(companion(d, side), limits);
}

InvariantCertificate certificate(const RailKnotoidDiagram& d, const Limits& limits) {
  InvariantCertificate cert;
  const LinkDiagram ko = companion(d, ClosureSide::Over);
  const LinkDiagram ku = companion(d, ClosureSide::Under);
  const LinkDiagram ko_minus = orient(ko, Orientation::Minus);
  const LinkDiagram ku_minus = orient(ku, Orientation::Minus);

  cert.bracket_o = bracket(ko, limits);
  cert.bracket_u = bracket(ku, limits);
  cert.writhe_o_plus = writhe(ko);
  cert.writhe_u_plus = writhe(ku);

  const Laurent1 minus_a3 = Laurent1::monomial(kVarA, {3}, -1);
  cert.x_o_plus = power(minus_a3, -writhe(ko)) * cert.bracket_o;
  cert.x_o_minus = power(minus_a3, -writhe(ko_minus)) * cert.bracket_o;
  cert.x_u_plus = power(minus_a3, -writhe(ku)) * cert.bracket_u;
  cert.x_u_minus = power(minus_a3, -writhe(ku_minus)) * cert.bracket_u;
  cert.jones_o_plus = substitute_A_to_t(cert.x_o_plus);
  cert.jones_o_minus = substitute_A_to_t(cert.x_o_minus);
  cert.jones_u_plus = substitute_A_to_t(cert.x_u_plus);
  cert.jones_u_minus = substitute_A_to_t(cert.x_u_minus);

  cert.homfly_o_plus = homflypt(ko, limits);
  cert.homfly_o_minus = homflypt(ko_minus, limits);
  cert.homfly_u_plus = homflypt(ku, limits);
  cert.homfly_u_minus = homflypt(ku_minus, limits);
  cert.kauffman_o = kauffman_f(ko, limits);
  cert.kauffman_u = kauffman_f(ku, limits);
  return cert;
}

std::vector<std::pair<std::string, std::string>> InvariantCertificate::fields() const {
  using railknot::to_string;
  return {
      {"bracket_o", to_string(bracket_o)},
      {"bracket_u", to_string(bracket_u)},
      {"writhe_o_plus", std::to_string(writhe_o_plus)},
      {"writhe_u_plus", std::to_string(writhe_u_plus)},
      {"x_o_plus", to_string(x_o_plus)},
      {"x_o_minus", to_string(x_o_minus)},
      {"x_u_plus", to_string(x_u_plus)},
      {"x_u_minus", to_string(x_u_minus)},
      {"jones_o_plus", to_string(jones_o_plus)},
      {"jones_o_minus", to_string(jones_o_minus)},
      {"jones_u_plus", to_string(jones_u_plus)},
      {"jones_u_minus", to_string(jones_u_minus)},
      {"homfly_o_plus", to_string(homfly_o_plus)},
      {"homfly_o_minus", to_string(homfly_o_minus)},
      {"homfly_u_plus", to_string(homfly_u_plus)},
      {"homfly_u_minus", to_string(homfly_u_minus)},
      {"kauffman_o", to_string(kauffman_o)},
      {"kauffman_u", to_string(kauffman_u)},
  };
}

std::string InvariantCertificate::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, value] : fields()) {
    if (name.rfind("writhe", 0) == 0) {
      j[name] = std::stoi(value);
    } else {
      j[name] = value;
    }
  }
  return j.dump(2) + "\n";
}

bool InvariantCertificate::regular_only_field(const std::string& name) {
  return name.rfind("bracket", 0) == 0 || name.rfind("writhe", 0) == 0;
}

Verdict compare(const InvariantCertificate& a, const InvariantCertificate& b, bool regular) {
  Verdict v;
  auto fa = a.fields();
  auto fb = b.fields();
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (!regular && InvariantCertificate::regular_only_field(fa[i].first)) continue;
    if (fa[i].second != fb[i].second) v.differing_fields.push_back(fa[i].first);
  }
  return v;
}

Verdict compare(const RailKnotoidDiagram& a, const RailKnotoidDiagram& b, bool regular, const Limits& limits) {
  return compare(certificate(a, limits), certificate(b, limits), regular);
}

}  // namespace railknot
