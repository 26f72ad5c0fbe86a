#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "railknot/errors.hpp"
#include "railknot/polynomial.hpp"

using namespace railknot;

namespace {

Laurent1 random_laurent1(std::mt19937& rng, const Laurent1::Variables& vars) {
  std::uniform_int_distribution<int> terms(0, 5), exp(-8, 8), coef(-9, 9);
  Laurent1 p(vars);
  for (int i = terms(rng); i > 0; --i) p += Laurent1::monomial(vars, {exp(rng)}, coef(rng));
  return p;
}

Laurent2 random_laurent2(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 5), exp(-4, 4), coef(-9, 9);
  Laurent2 p(kVarsLM);
  for (int i = terms(rng); i > 0; --i) p += Laurent2::monomial(kVarsLM, {exp(rng), exp(rng)}, coef(rng));
  return p;
}

}  // namespace

TEST_CASE("rendering") {
  Laurent1 p = Laurent1::monomial(kVarA, {-4}, -1) + Laurent1::constant(kVarA, 1);
  CHECK(to_string(p) == "-1*A^-4 + 1*A^0");
  CHECK(to_string(Laurent1(kVarA)) == "0");
  CHECK(to_string(Laurent1::constant(kVarA, 1)) == "1");
  CHECK(to_string(Laurent1::constant(kVarA, -3)) == "-3");

  Laurent1 j = Laurent1::monomial(kVarT, {2}, -1) + Laurent1::monomial(kVarT, {4}, 1) + Laurent1::monomial(kVarT, {-3}, 2);
  CHECK(to_string(j) == "2*t^(-3/4) + -1*t^(1/2) + 1*t^1");

  Laurent2 h = Laurent2::monomial(kVarsLM, {-2, 2}) - Laurent2::monomial(kVarsLM, {-4, 0});
  CHECK(to_string(h) == "-1*l^-4*m^0 + 1*l^-2*m^2");
}

TEST_CASE("arithmetic examples") {
  const Laurent1 a = Laurent1::monomial(kVarA, {1});
  const Laurent1 a_inv = Laurent1::monomial(kVarA, {-1});
  CHECK((a * a_inv).is_constant(1));

  // delta^2 = A^4 + 2 + A^-4
  Laurent1 delta = -(a * a) - a_inv * a_inv;
  CHECK(to_string(delta * delta) == "1*A^-4 + 2*A^0 + 1*A^4");
  CHECK((delta - delta).is_zero());
  CHECK(power(delta, 0).is_constant(1));
  CHECK(power(-a * a * a, -1) == -Laurent1::monomial(kVarA, {-3}));
  CHECK_THROWS_AS(power(delta, -1), UsageError);

  const Laurent1 minus_a3 = Laurent1::monomial(kVarA, {3}, -1);
  CHECK(power(minus_a3, -2) == Laurent1::monomial(kVarA, {-6}));
  CHECK(power(minus_a3, 3) == Laurent1::monomial(kVarA, {9}, -1));
}

TEST_CASE("coefficients beyond 64 bits") {
  const Laurent1 two = Laurent1::constant(kVarA, 2);
  Laurent1 big = power(two, 100) * power(two, 100);
  CHECK(to_string(big) == "1606938044258990275541962092341162602522202993782792835301376");
  CHECK(parse_laurent1(to_string(big) + "*A^0", kVarA) == big);
}

TEST_CASE("mixing variables is rejected") {
  Laurent1 a = Laurent1::monomial(kVarA, {1});
  Laurent1 t = Laurent1::monomial(kVarT, {1});
  CHECK_THROWS_AS(a + t, UsageError);
  CHECK_THROWS_AS(a * t, UsageError);
}

TEST_CASE("substitution A -> t^(-1/4)") {
  Laurent1 p = Laurent1::monomial(kVarA, {-16}, -1) + Laurent1::monomial(kVarA, {-12}) + Laurent1::monomial(kVarA, {-4});
  CHECK(to_string(substitute_A_to_t(p)) == "1*t^1 + 1*t^3 + -1*t^4");
  CHECK(substitute_A_to_t(Laurent1::monomial(kVarA, {3}, -1)) == Laurent1::monomial(kVarT, {-3}, -1));
  CHECK(substitute_A_to_t(Laurent1::constant(kVarA, 1)).is_constant(1));
  CHECK(to_string(substitute_A_to_t(parse_laurent1("-1*A^-2 + -1*A^2", kVarA))) == "-1*t^(-1/2) + -1*t^(1/2)");
  CHECK_THROWS_AS(substitute_A_to_t(Laurent1::monomial(kVarT, {1})), UsageError);
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_laurent1("1*A^", kVarA), ParseError);
  CHECK_THROWS_AS(parse_laurent1("0*A^2", kVarA), ParseError);
  CHECK_THROWS_AS(parse_laurent1("1*A^2 + 3*A^2", kVarA), ParseError);
  CHECK_THROWS_AS(parse_laurent1("1*B^2", kVarA), ParseError);
  CHECK_THROWS_AS(parse_laurent1("1*t^(1/3)", kVarT), ParseError);
  CHECK(parse_laurent1("0", kVarA).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20260417);
  for (int i = 0; i < 300; ++i) {
    Laurent1 p = random_laurent1(rng, kVarA), q = random_laurent1(rng, kVarA), r = random_laurent1(rng, kVarA);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == Laurent1(kVarA));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Laurent1 p = random_laurent1(rng, kVarA), q = random_laurent1(rng, kVarA);
    CHECK(substitute_A_to_t(p * q) == substitute_A_to_t(p) * substitute_A_to_t(q));
    CHECK(substitute_A_to_t(p + q) == substitute_A_to_t(p) + substitute_A_to_t(q));
  }
}

TEST_CASE("rendering parses back") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    Laurent1 a = random_laurent1(rng, kVarA);
    Laurent1 t = random_laurent1(rng, kVarT);
    Laurent2 h = random_laurent2(rng);
    CHECK(parse_laurent1(to_string(a), kVarA) == a);
    CHECK(parse_laurent1(to_string(t), kVarT) == t);
    CHECK(parse_laurent2(to_string(h), kVarsLM) == h);
  }
}
