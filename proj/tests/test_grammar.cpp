#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gramtree/grammar.hpp"
#include "gramtree/rational.hpp"
#include "gramtree/text.hpp"

using namespace gramtree;
using algebra::LaurentPoly;
using algebra::Monomial;
using algebra::Rat;

namespace {

LaurentPoly P(const std::string& s) { return algebra::parse_poly(s); }

}  // namespace

TEST_CASE("grammar construction and validation") {
  grammar::Grammar g("demo", {{"x", P("2*x*y")}}, {"y"});
  CHECK(g.knows("x"));
  CHECK(g.knows("y"));
  CHECK(!g.knows("z"));
  // Rules may only mention ruled or inert variables.
  CHECK_THROWS_AS(grammar::Grammar("bad", {{"x", P("x*w")}}, {}), std::invalid_argument);
  // A variable cannot be ruled and inert at once.
  CHECK_THROWS_AS(grammar::Grammar("bad", {{"x", P("x")}}, {"x"}), std::invalid_argument);
}

TEST_CASE("grammar text format") {
  grammar::Grammar g = grammar::parse_grammar(
      "# doubling rule\n"
      "x -> 2*x*y   # trailing comment\n"
      "\n"
      "inert: y, z\n",
      "demo");
  CHECK(g.rules().at("x") == P("2*x*y"));
  CHECK(g.inert() == std::set<std::string>{"y", "z"});
  CHECK_THROWS_AS(grammar::parse_grammar("x 2*x", "bad"), std::invalid_argument);
  CHECK_THROWS_AS(grammar::parse_grammar("x -> 2*x\nx -> 3*x", "bad"), std::invalid_argument);
  CHECK_THROWS_AS(grammar::parse_grammar("inert: ,", "bad"), std::invalid_argument);
}

TEST_CASE("built-in grammars") {
  for (const char* name : {"chen4", "motz", "soy", "rmotz"}) {
    CHECK(grammar::is_builtin(name));
    CHECK(grammar::builtin(name).name() == name);
  }
  CHECK(!grammar::is_builtin("nope"));
  CHECK_THROWS_AS(grammar::builtin("nope"), std::invalid_argument);
  grammar::Grammar motz = grammar::builtin("motz");
  CHECK(motz.rules().at("t") == P("t^2*v"));
  CHECK(motz.rules().at("u") == P("2*t*u*v"));
  CHECK(motz.rules().at("v") == P("4*t*u"));
  CHECK(grammar::builtin("rmotz").rules().at("v2") == P("4*u1*u2^-1*u3"));
}

TEST_CASE("derivative basics") {
  grammar::Grammar motz = grammar::builtin("motz");
  CHECK(grammar::derive(motz, P("5")) == LaurentPoly());
  CHECK(grammar::derive(motz, P("1/2*v")) == P("2*t*u"));
  CHECK_THROWS_AS(grammar::derive(motz, P("w")), grammar::UnknownVariable);
  grammar::Grammar g("demo", {{"x", P("y")}}, {"y"});
  CHECK(grammar::derive(g, P("y")) == LaurentPoly());
  CHECK(grammar::derive(g, P("x*y")) == P("y^2"));
  // Integer-power rule holds for negative exponents too.
  CHECK(grammar::derive(g, P("x^-2")) == P("-2*x^-3*y"));
  CHECK(grammar::derive_n(g, P("x"), 0) == P("x"));
}

TEST_CASE("derivative is linear and Leibniz") {
  grammar::Grammar motz = grammar::builtin("motz");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick_exp(-2, 2), pick_coeff(-4, 4), pick_terms(1, 3);
  auto random_poly = [&]() {
    LaurentPoly p;
    static const char* vars[] = {"t", "u", "v"};
    int terms = pick_terms(rng);
    for (int i = 0; i < terms; ++i) {
      std::map<std::string, int> exps;
      for (const char* v : vars) exps[v] = pick_exp(rng);
      p = p + LaurentPoly::term(Rat(pick_coeff(rng)), Monomial(exps));
    }
    return p;
  };
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = random_poly(), b = random_poly();
    CHECK(grammar::derive(motz, a + b) ==
          grammar::derive(motz, a) + grammar::derive(motz, b));
    CHECK(grammar::derive(motz, a * b) ==
          grammar::derive(motz, a) * b + a * grammar::derive(motz, b));
  }
}

TEST_CASE("leaf-statistic grammar derivative facts") {
  grammar::Grammar soy = grammar::builtin("soy");
  LaurentPoly d = P("d");
  CHECK(grammar::derive_n(soy, d, 1) == P("2*b"));
  CHECK(grammar::derive_n(soy, d, 2) == P("6*t*a*d + 6*t*b*c"));
  CHECK(grammar::derive_n(soy, d, 3) ==
        P("t*a*b + t^2*a*c*d + t^2*a*d^2 + t^2*b*c^2 + t^2*b*c*d").scaled(Rat(24)));
  CHECK(grammar::derive_n(soy, d, 4) ==
        P("t^2*a^2*d + 2*t^2*a*b*d + t^3*a*d^3 + t^3*a*c^2*d + 2*t^3*a*c*d^2 + "
          "2*t^2*a*b*c + t^2*b^2*c + t^3*b*c^3 + 2*t^3*b*c^2*d + t^3*b*c*d^2")
            .scaled(Rat(120)));

  // Inverse powers of t telescope to zero.
  CHECK(grammar::derive(soy, P("t^-1")) == P("-c - d"));
  CHECK(grammar::derive_n(soy, P("t^-1"), 2) == P("-2*a - 2*b"));
  CHECK(grammar::derive(soy, P("t^-2")) == P("-2*t^-1*c - 2*t^-1*d"));
  CHECK(grammar::derive_n(soy, P("t^-2"), 2) ==
        P("c^2 + 2*c*d + d^2").scaled(Rat(2)) + P("a + b").scaled(Rat(-4)).times_term(
            Rat(1), Monomial::variable("t", -1)));
  CHECK(grammar::derive_n(soy, P("t^-2"), 3) == P("a - b") * P("c - d").scaled(Rat(12)));
  CHECK(grammar::derive_n(soy, P("t^-2"), 4) == P("a - b") * P("a - b").scaled(Rat(24)));
  CHECK(grammar::derive_n(soy, P("t^-2"), 5) == LaurentPoly());
}

TEST_CASE("tip-augmented grammar derivative facts") {
  grammar::Grammar rmotz = grammar::builtin("rmotz");
  LaurentPoly seed = P("2*u3");
  CHECK(grammar::derive_n(rmotz, seed, 1) == P("6*t*u2*v2"));
  CHECK(grammar::derive_n(rmotz, seed, 2) ==
        P("t^2*u2*v1*v2 + t*u1*u3").scaled(Rat(24)));
  CHECK(grammar::derive_n(rmotz, seed, 3) ==
        P("t^3*u2*v1^2*v2 + t^2*u1*u2*v2 + t^2*u1*u3*v1 + t^2*u2*u3*v2").scaled(Rat(120)));
  CHECK(grammar::derive_n(rmotz, seed, 4) ==
        P("t^4*u2*v1^3*v2 + t^3*u2^2*v2^2 + 2*t^3*u2*u3*v1*v2 + 2*t^3*u1*u2*v1*v2 + "
          "t^3*u1*u3*v1^2 + t^2*u1*u3^2 + t^2*u1^2*u3")
            .scaled(Rat(720)));

  CHECK(grammar::derive(rmotz, P("t^-1")) == P("-v1"));
  CHECK(grammar::derive_n(rmotz, P("t^-1"), 2) == P("-2*u1 - 2*u3"));
  CHECK(grammar::derive(rmotz, P("t^-2")) == P("-2*t^-1*v1"));
  CHECK(grammar::derive_n(rmotz, P("t^-2"), 2) ==
        P("2*v1^2 - 4*t^-1*u1 - 4*t^-1*u3"));
  // The u2^-1 factor of the v2 rule cancels exactly here.
  CHECK(grammar::derive_n(rmotz, P("t^-2"), 3) ==
        P("12*u1*v1 + 12*u3*v1 - 24*u2*v2"));
  CHECK(grammar::derive_n(rmotz, P("t^-2"), 4) == P("u1 - u3") * P("u1 - u3").scaled(Rat(24)));
  CHECK(grammar::derive_n(rmotz, P("t^-2"), 5) == LaurentPoly());

  grammar::Grammar motz = grammar::builtin("motz");
  CHECK(grammar::derive(motz, P("t^-1")) == P("-v"));
  CHECK(grammar::derive(motz, P("t^-2")) == P("-2*t^-1*v"));
  CHECK(grammar::derive_n(motz, P("t^-2"), 2) == P("2*v^2 - 8*u"));
  CHECK(grammar::derive_n(motz, P("t^-2"), 3) == LaurentPoly());
}

TEST_CASE("derivatives stay inside the nonnegative cone") {
  // Despite the u2^-1 rule, iterated derivatives of the seed never keep a
  // negative exponent or a negative coefficient.
  grammar::Grammar rmotz = grammar::builtin("rmotz");
  LaurentPoly d = P("2*u3");
  for (int n = 1; n <= 9; ++n) {
    d = grammar::derive(rmotz, d);
    CHECK(!d.has_negative_exponent());
    for (auto& [m, c] : d.terms()) CHECK(c > 0);
  }
}

TEST_CASE("normalized derivatives are integer polynomials") {
  grammar::Grammar soy = grammar::builtin("soy");
  grammar::Grammar rmotz = grammar::builtin("rmotz");
  LaurentPoly ds = P("d"), dr = P("2*u3");
  for (int n = 1; n <= 9; ++n) {
    ds = grammar::derive(soy, ds);
    dr = grammar::derive(rmotz, dr);
    Rat fs(algebra::factorial(n + 1)), fr(algebra::factorial(n + 2));
    for (auto& [m, c] : ds.terms()) CHECK(algebra::is_integer(c / fs));
    for (auto& [m, c] : dr.terms()) CHECK(algebra::is_integer(c / fr));
  }
}

TEST_CASE("generating series") {
  grammar::Grammar motz = grammar::builtin("motz");
  algebra::PowerSeries gen = grammar::gen_series(motz, P("t^-2"), 4);
  CHECK(gen.coeff(0) == P("t^-2"));
  CHECK(gen.coeff(1) == P("-2*t^-1*v"));
  CHECK(gen.coeff(2) == P("v^2 - 4*u"));
  CHECK(gen.coeff(3) == LaurentPoly());
  CHECK(gen.coeff(4) == LaurentPoly());
  CHECK(grammar::gen_series(motz, P("1"), 3) ==
        algebra::PowerSeries(3, {P("1")}));
}

TEST_CASE("generating series is multiplicative") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick_exp(-2, 2);
  for (const char* name : {"chen4", "motz", "soy", "rmotz"}) {
    grammar::Grammar g = grammar::builtin(name);
    std::vector<std::string> vars;
    for (auto& [v, rhs] : g.rules()) vars.push_back(v);
    auto random_monomial = [&]() {
      std::map<std::string, int> exps;
      for (auto& v : vars) exps[v] = pick_exp(rng);
      return LaurentPoly::term(Rat(1), Monomial(exps));
    };
    for (int i = 0; i < 8; ++i) {
      LaurentPoly a = random_monomial(), b = random_monomial();
      CHECK(grammar::gen_series(g, a * b, 6) ==
            grammar::gen_series(g, a, 6) * grammar::gen_series(g, b, 6));
    }
  }
  // In particular Gen(t^-1)^2 = Gen(t^-2) for the three grammars with a
  // t-rule; the square telescopes to a polynomial in q.
  for (const char* name : {"motz", "soy", "rmotz"}) {
    grammar::Grammar g = grammar::builtin(name);
    algebra::PowerSeries gen1 = grammar::gen_series(g, P("t^-1"), 6);
    CHECK(gen1 * gen1 == grammar::gen_series(g, P("t^-2"), 6));
  }
}
