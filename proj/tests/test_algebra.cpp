#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gramtree/rational.hpp"
#include "gramtree/series.hpp"
#include "gramtree/text.hpp"

using namespace gramtree::algebra;

namespace {

LaurentPoly P(const std::string& s) { return parse_poly(s); }

// Small random Laurent polynomials over x, y, z for property tests.
struct Gen {
  std::mt19937 rng{20260816};

  Rat rat() {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
  }

  LaurentPoly poly(bool laurent = true) {
    static const char* vars[] = {"x", "y", "z"};
    std::uniform_int_distribution<int> nterms(0, 4), nvars(0, 2), exp(laurent ? -3 : 0, 3);
    LaurentPoly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
      std::map<std::string, int> exps;
      int v = nvars(rng);
      for (int j = 0; j <= v; ++j) exps[vars[j]] = exp(rng);
      p = p + LaurentPoly::term(rat(), Monomial(exps));
    }
    return p;
  }
};

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-2, 0) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(parse_rational("21/14") == Rat(3, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(parse_rational("+7/3") == Rat(7, 3));
  CHECK(rational_text(parse_rational("-10/4")) == "-5/2");
  CHECK(is_integer(Rat(8, 4)));  // exact even on a non-reduced value
  CHECK(!is_integer(Rat(1, 3)));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2/"), std::invalid_argument);
}

TEST_CASE("monomial construction and validation") {
  Monomial m(std::map<std::string, int>{{"x", 2}, {"y", 0}, {"z", -1}});
  CHECK(m.exponent("x") == 2);
  CHECK(m.exponent("y") == 0);  // zero exponents are dropped
  CHECK(m.exponents().size() == 2);
  CHECK(m.total_degree() == 1);
  CHECK(Monomial().is_constant());
  CHECK_THROWS_AS(Monomial::variable("q"), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::variable(""), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::variable("2x"), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::variable("a b"), std::invalid_argument);
  CHECK(Monomial::variable("x1y1").exponent("x1y1") == 1);
}

TEST_CASE("monomial arithmetic") {
  Monomial u2 = Monomial::variable("u2", -1);
  Monomial m = u2.times(Monomial::variable("u2"));
  CHECK(m.is_constant());  // u2^-1 * u2 cancels
  CHECK(Monomial::variable("x", 3).pow(-2) == Monomial::variable("x", -6));
  CHECK(Monomial::variable("x", 5).pow(0) == Monomial());
  Monomial big = Monomial::variable("x", std::numeric_limits<int>::max());
  CHECK_THROWS_AS(big.times(Monomial::variable("x")), std::overflow_error);
  CHECK_THROWS_AS(big.pow(2), std::overflow_error);
}

TEST_CASE("term order is graded with ascending tie break") {
  // Degrees ascend first.
  CHECK(to_text(P("x + 1 + x^-1")) == "1*x^-1 + 1 + 1*x");
  // Equal degree: walk names ascending, smaller exponent first, so b*c*t
  // precedes a*d*t (exponent of a is 0 versus 1).
  CHECK(to_text(P("a*d*t + b*c*t")) == "1*b*c*t + 1*a*d*t");
  CHECK(Monomial::variable("x") < Monomial::variable("x", 2));
  Monomial bct(std::map<std::string, int>{{"b", 1}, {"c", 1}, {"t", 1}});
  Monomial adt(std::map<std::string, int>{{"a", 1}, {"d", 1}, {"t", 1}});
  CHECK(bct < adt);
  CHECK(!(adt < bct));
  CHECK(!(adt < adt));
}

TEST_CASE("polynomial arithmetic stays canonical") {
  CHECK(P("x") + LaurentPoly() == P("x"));
  CHECK(P("x") - P("x") == LaurentPoly());
  CHECK((P("x + y") * P("x - y")) == P("x^2 - y^2"));
  CHECK(P("x1 + 2*x1*x2 + x1*x2^2") * P("x1") == P("x1^2 + 2*x1^2*x2 + x1^2*x2^2"));
  // Laurent cancellation inside products.
  CHECK(P("u2^-1*u3") * P("u2") == P("u3"));
  CHECK(P("1/2*v").scaled(Rat(2)) == P("v"));
  CHECK(P("x + 1").pow(3) == P("x^3 + 3*x^2 + 3*x + 1"));
  CHECK(P("x").pow(0) == P("1"));
  CHECK(LaurentPoly().is_zero());
  CHECK(P("x").coeff(Monomial::variable("x")) == 1);
  CHECK(P("x").coeff(Monomial::variable("y")) == 0);
}

TEST_CASE("substitution") {
  // Simultaneous, not sequential: x and y swap cleanly.
  CHECK(P("x^2 + y").substitute({{"x", P("y")}, {"y", P("x")}}) == P("y^2 + x"));
  // Bivariate Motzkin value turns into a Narayana polynomial.
  CHECK(P("u^2 + u*v^2").substitute({{"u", P("x")}, {"v", P("1 + x")}}) ==
        P("x + 3*x^2 + x^3"));
  // Untouched variables stay as they are.
  CHECK(P("x*y").substitute({{"x", P("2")}}) == P("2*y"));
  // Negative power of a single-term image inverts it.
  CHECK(P("u2^-1").substitute({{"u2", P("2*x")}}) == P("1/2*x^-1"));
  CHECK(P("u2^-2*u3").substitute({{"u2", P("1/3*t")}}) == P("9*t^-2*u3"));
  CHECK_THROWS_AS(P("u2^-1").substitute({{"u2", P("1 + x")}}), NonInvertibleSubstitution);
  CHECK_THROWS_AS(P("u2^-1").substitute({{"u2", LaurentPoly()}}), NonInvertibleSubstitution);
  // A nonnegative power of a many-term image is fine.
  CHECK(P("u^2").substitute({{"u", P("1 + x")}}) == P("1 + 2*x + x^2"));
}

TEST_CASE("arithmetic properties on random inputs") {
  Gen gen;
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  Gen gen;
  std::map<std::string, LaurentPoly> sigma = {{"x", P("y + 1")}, {"y", P("2*z")}};
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = gen.poly(false), b = gen.poly(false);
    CHECK((a + b).substitute(sigma) == a.substitute(sigma) + b.substitute(sigma));
    CHECK((a * b).substitute(sigma) == a.substitute(sigma) * b.substitute(sigma));
  }
}

TEST_CASE("series arithmetic") {
  PowerSeries one(4);
  one.set_coeff(0, P("1"));
  PowerSeries geo(4);
  for (int i = 0; i <= 4; ++i) geo.set_coeff(i, P("1"));
  PowerSeries one_minus_q(4);
  one_minus_q.set_coeff(0, P("1"));
  one_minus_q.set_coeff(1, P("-1"));
  CHECK(one_minus_q * geo == one);
  CHECK(geo * one == geo);

  // Truncation order is the minimum of the operands'.
  PowerSeries shorter(2);
  CHECK((geo + shorter).order() == 2);
  CHECK((geo * shorter).order() == 2);
  CHECK_THROWS_AS(shorter.coeff(3), OrderExceeded);
  CHECK_THROWS_AS(PowerSeries(2).set_coeff(5, P("1")), OrderExceeded);
}

TEST_CASE("series square root") {
  // sqrt(1 - 4 u q^2) = 1 - 2 u q^2 - 2 u^2 q^4 - ...
  PowerSeries a(4);
  a.set_coeff(0, P("1"));
  a.set_coeff(2, P("-4*u"));
  PowerSeries b = series_sqrt(a);
  CHECK(b.coeff(0) == P("1"));
  CHECK(b.coeff(1) == LaurentPoly());
  CHECK(b.coeff(2) == P("-2*u"));
  CHECK(b.coeff(3) == LaurentPoly());
  CHECK(b.coeff(4) == P("-2*u^2"));
  CHECK(b * b == a);

  // Leading term may be any square monomial, here t^-2 / 4.
  PowerSeries c(3);
  c.set_coeff(0, P("1/4*t^-2"));
  c.set_coeff(1, P("x"));
  PowerSeries d = series_sqrt(c);
  CHECK(d.coeff(0) == P("1/2*t^-1"));
  CHECK(d * d == c);

  PowerSeries bad(2);
  bad.set_coeff(0, P("2"));
  CHECK_THROWS_AS(series_sqrt(bad), NonSquareLeadingTerm);
  bad.set_coeff(0, P("t"));
  CHECK_THROWS_AS(series_sqrt(bad), NonSquareLeadingTerm);
  bad.set_coeff(0, P("1 + t"));
  CHECK_THROWS_AS(series_sqrt(bad), NonSquareLeadingTerm);
  bad.set_coeff(0, P("-4"));
  CHECK_THROWS_AS(series_sqrt(bad), NonSquareLeadingTerm);
}

TEST_CASE("series square root inverts squaring") {
  Gen gen;
  for (int i = 0; i < 50; ++i) {
    PowerSeries b(5);
    b.set_coeff(0, P("3*x^2*y^-4"));  // invertible squared leading term
    for (int n = 1; n <= 5; ++n) b.set_coeff(n, gen.poly());
    CHECK(series_sqrt(b * b) == b);
  }
}

TEST_CASE("canonical text rendering") {
  CHECK(to_text(LaurentPoly()) == "0");
  CHECK(to_text(P("5")) == "5");
  CHECK(to_text(P("-1/2")) == "-1/2");
  // y carries x-exponent 0, which sorts before x's exponent 1.
  CHECK(to_text(P("x - y")) == "-1*y + 1*x");
  CHECK(to_text(P("y - x")) == "1*y + -1*x");
  CHECK(to_text(P("3*u2^-1*u3*t^2")) == "3*t^2*u2^-1*u3");
  CHECK(to_text(P("x*x")) == "1*x^2");
  PowerSeries s(1);
  s.set_coeff(0, P("1"));
  s.set_coeff(1, P("x"));
  CHECK(to_text(s) == "order: 1\nq^0: 1\nq^1: 1*x\n");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P(""), std::invalid_argument);
  CHECK_THROWS_AS(P("x +"), std::invalid_argument);
  CHECK_THROWS_AS(P("x^"), std::invalid_argument);
  CHECK_THROWS_AS(P("^2"), std::invalid_argument);
  CHECK_THROWS_AS(P("x y"), std::invalid_argument);
  CHECK_THROWS_AS(P("(x)"), std::invalid_argument);
  CHECK_THROWS_AS(P("q"), std::invalid_argument);
  CHECK_THROWS_AS(P("x**2"), std::invalid_argument);
  CHECK_THROWS_AS(P("2/"), std::invalid_argument);
}

TEST_CASE("text round trip is the identity on canonical text") {
  Gen gen;
  for (int i = 0; i < 100; ++i) {
    LaurentPoly p = gen.poly();
    CHECK(parse_poly(to_text(p)) == p);
  }
}

TEST_CASE("polynomial JSON en/decoding") {
  LaurentPoly p = P("1/2*x^-2*y + 3 - z");
  nlohmann::json j = poly_to_json(p);
  CHECK(j["terms"].is_array());
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(poly_to_json(LaurentPoly())) == LaurentPoly());

  nlohmann::json known = poly_to_json(P("2*x"));
  CHECK(known["terms"][0]["coeff"] == "2");
  CHECK(known["terms"][0]["exps"]["x"] == 1);

  CHECK_THROWS_AS(poly_from_json(nlohmann::json::array()), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json(nlohmann::json{{"terms", 3}}), std::invalid_argument);
}

TEST_CASE("series JSON en/decoding") {
  PowerSeries s(2);
  s.set_coeff(0, P("u"));
  s.set_coeff(2, P("v^2 - 4*u"));
  nlohmann::json j = series_to_json(s);
  CHECK(j["order"] == 2);
  CHECK(series_from_json(j) == s);
  CHECK_THROWS_AS(series_from_json(nlohmann::json{{"order", 2}, {"coeffs", nlohmann::json::array()}}),
                  std::invalid_argument);
}
