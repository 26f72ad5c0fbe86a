#include "railknot/polynomial.hpp"

#include <numeric>
#include <vector>

namespace railknot {

Laurent1 substitute_A_to_t(const Laurent1& p) {
  p.require_same_variables(Laurent1(kVarA));
  Laurent1 r(kVarT);
  for (const auto& [e, c] : p.terms()) r.add_term({-e[0]}, c);
  return r;
}

namespace {

std::string render_exponent(const std::string& var, int e) {
  if (var == kVarT[0]) {
    if (e % 4 == 0) return "t^" + std::to_string(e / 4);
    int g = std::gcd(e < 0 ? -e : e, 4);
    return "t^(" + std::to_string(e / g) + "/" + std::to_string(4 / g) + ")";
  }
  return var + "^" + std::to_string(e);
}

template <std::size_t N>
std::string render(const Laurent<N>& p) {
  if (p.is_zero()) return "0";
  if (p.is_monomial() && p.terms().begin()->first == typename Laurent<N>::Exponent{}) {
    return p.terms().begin()->second.str();
  }
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (std::size_t i = 0; i < N; ++i) out += "*" + render_exponent(p.variables()[i], e[i]);
  }
  return out;
}

std::vector<std::string_view> split_terms(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(" + ", start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 3;
  }
  return parts;
}

int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("empty integer in polynomial '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i == s.size()) throw ParseError("bad integer in polynomial '" + std::string(whole) + "'");
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw ParseError("bad integer '" + std::string(s) + "' in polynomial '" +
                       std::string(whole) + "'");
    }
    v = v * 10 + (s[i] - '0');
    if (v > 1'000'000'000) throw ParseError("exponent out of range in '" + std::string(whole) + "'");
  }
  return static_cast<int>(neg ? -v : v);
}

// Parses "V^e" for one variable; returns the exponent in storage units.
int parse_power(std::string_view piece, const std::string& var, std::string_view whole) {
  if (var == kVarT[0]) {
    if (piece.substr(0, 2) != "t^") throw ParseError("expected t^ in '" + std::string(whole) + "'");
    std::string_view ex = piece.substr(2);
    if (!ex.empty() && ex.front() == '(') {
      if (ex.back() != ')') throw ParseError("unbalanced exponent in '" + std::string(whole) + "'");
      ex = ex.substr(1, ex.size() - 2);
      auto slash = ex.find('/');
      if (slash == std::string_view::npos) {
        throw ParseError("fractional exponent without '/' in '" + std::string(whole) + "'");
      }
      int num = parse_int(ex.substr(0, slash), whole);
      int den = parse_int(ex.substr(slash + 1), whole);
      if (den <= 0 || 4 % den != 0) {
        throw ParseError("exponent not on the quarter grid in '" + std::string(whole) + "'");
      }
      return num * (4 / den);
    }
    return 4 * parse_int(ex, whole);
  }
  std::string prefix = var + "^";
  if (piece.substr(0, prefix.size()) != prefix) {
    throw ParseError("expected " + prefix + " in '" + std::string(whole) + "'");
  }
  return parse_int(piece.substr(prefix.size()), whole);
}

template <std::size_t N>
Laurent<N> parse(std::string_view text, const typename Laurent<N>::Variables& vars) {
  Laurent<N> p(vars);
  if (text == "0") return p;
  for (std::string_view term : split_terms(text)) {
    std::vector<std::string_view> pieces;
    std::size_t start = 0;
    while (true) {
      std::size_t pos = term.find('*', start);
      pieces.push_back(term.substr(start, pos == std::string_view::npos ? pos : pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (pieces.size() != 1 && pieces.size() != N + 1) {
      throw ParseError("term '" + std::string(term) + "' has the wrong number of factors");
    }
    Integer c;
    try {
      c = Integer(std::string(pieces[0]));
    } catch (const std::exception&) {
      throw ParseError("bad coefficient in term '" + std::string(term) + "'");
    }
    if (c == 0) throw ParseError("zero coefficient in term '" + std::string(term) + "'");
    typename Laurent<N>::Exponent e{};
    if (pieces.size() == N + 1) {
      for (std::size_t i = 0; i < N; ++i) e[i] = parse_power(pieces[i + 1], vars[i], text);
    }
    if (p.coefficient(e) != 0) throw ParseError("repeated exponent in '" + std::string(text) + "'");
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

std::string to_string(const Laurent1& p) { return render(p); }
std::string to_string(const Laurent2& p) { return render(p); }

Laurent1 parse_laurent1(std::string_view text, const Laurent1::Variables& vars) {
  return parse<1>(text, vars);
}

Laurent2 parse_laurent2(std::string_view text, const Laurent2::Variables& vars) {
  return parse<2>(text, vars);
}

}  // namespace railknot
