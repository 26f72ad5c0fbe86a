#pragma once

// Exact Laurent polynomials with arbitrary-precision integer coefficients in
// one or two variables. Every knot invariant in the library lands here.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "railknot/errors.hpp"

namespace railknot {

using Integer = boost::multiprecision::cpp_int;

template <std::size_t N>
class Laurent {
 public:
  using Exponent = std::array<int, N>;
  using Variables = std::array<std::string, N>;
  using TermMap = std::map<Exponent, Integer>;

  explicit Laurent(Variables vars) : vars_(std::move(vars)) {}

  static Laurent constant(Variables vars, const Integer& c) {
    Laurent p(std::move(vars));
    p.add_term(Exponent{}, c);
    return p;
  }

  static Laurent monomial(Variables vars, const Exponent& e, const Integer& c = 1) {
    Laurent p(std::move(vars));
    p.add_term(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  const Variables& variables() const { return vars_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // True when the value is the constant c.
  bool is_constant(const Integer& c) const {
    if (c == 0) return terms_.empty();
    return terms_.size() == 1 && terms_.begin()->first == Exponent{} &&
           terms_.begin()->second == c;
  }

  Integer coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& q) {
    require_same_variables(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  Laurent& operator-=(const Laurent& q) {
    require_same_variables(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }

  Laurent& operator*=(const Laurent& q) {
    *this = *this * q;
    return *this;
  }

  friend Laurent operator+(Laurent p, const Laurent& q) { return p += q; }
  friend Laurent operator-(Laurent p, const Laurent& q) { return p -= q; }

  friend Laurent operator-(const Laurent& p) {
    Laurent r(p.vars_);
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Laurent operator*(const Laurent& p, const Laurent& q) {
    p.require_same_variables(q);
    Laurent r(p.vars_);
    for (const auto& [e1, c1] : p.terms_) {
      for (const auto& [e2, c2] : q.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    }
    return r;
  }

  friend bool operator==(const Laurent& p, const Laurent& q) {
    return p.vars_ == q.vars_ && p.terms_ == q.terms_;
  }
  friend bool operator!=(const Laurent& p, const Laurent& q) { return !(p == q); }

  // Multiply every exponent vector by a monomial shift (no coefficient change).
  Laurent shifted(const Exponent& by) const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) {
      Exponent s;
      for (std::size_t i = 0; i < N; ++i) s[i] = e[i] + by[i];
      r.terms_.emplace(s, c);
    }
    return r;
  }

  void require_same_variables(const Laurent& q) const {
    if (vars_ != q.vars_) {
      throw UsageError("polynomial variable mismatch: " + describe(vars_) + " vs " +
                       describe(q.vars_));
    }
  }

 private:
  static std::string describe(const Variables& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < N; ++i) s += (i ? "," : "") + v[i];
    return s + ")";
  }

  Variables vars_;
  TermMap terms_;
};

using Laurent1 = Laurent<1>;
using Laurent2 = Laurent<2>;

inline const Laurent1::Variables kVarA{"A"};
inline const Laurent1::Variables kVarT{"t^{1/4}"};  // exponents count quarter powers of t
inline const Laurent2::Variables kVarsLM{"l", "m"};
inline const Laurent2::Variables kVarsAZ{"a", "z"};

// p^n; negative n only for monomials with coefficient +-1.
template <std::size_t N>
Laurent<N> power(const Laurent<N>& p, int n) {
  if (n < 0) {
    if (!p.is_monomial() || abs(p.terms().begin()->second) != 1) {
      throw UsageError("negative power of a polynomial that is not a unit monomial");
    }
    const auto& [e, c] = *p.terms().begin();
    typename Laurent<N>::Exponent inv;
    for (std::size_t i = 0; i < N; ++i) inv[i] = -e[i];
    return power(Laurent<N>::monomial(p.variables(), inv, c), -n);
  }
  Laurent<N> result = Laurent<N>::constant(p.variables(), 1);
  Laurent<N> base = p;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

// A -> t^{-1/4}: exponent k of A becomes exponent -k on the quarter grid of t.
Laurent1 substitute_A_to_t(const Laurent1& p);

// Canonical text: terms ascending by exponent, "c*V^e" joined with " + ".
// A constant renders as the bare integer and zero as "0".
std::string to_string(const Laurent1& p);
std::string to_string(const Laurent2& p);

Laurent1 parse_laurent1(std::string_view text, const Laurent1::Variables& vars);
Laurent2 parse_laurent2(std::string_view text, const Laurent2::Variables& vars);

}  // namespace railknot
