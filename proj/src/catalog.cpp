#include "gramtree/catalog.hpp"

#include <algorithm>

#include "gramtree/rational.hpp"
#include "gramtree/text.hpp"

namespace gramtree::catalog {

using algebra::Int;
using algebra::LaurentPoly;
using algebra::Monomial;
using algebra::PowerSeries;
using algebra::Rat;

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"narayana", "g2",     "g4", "g6",
                                                 "m2",       "m5", "gtilde", "m5t"};
  return names;
}

FamilyId family_from_name(const std::string& name) {
  if (name == "narayana") return FamilyId::narayana;
  if (name == "g2") return FamilyId::g2;
  if (name == "g4") return FamilyId::g4;
  if (name == "g6") return FamilyId::g6;
  if (name == "m2") return FamilyId::m2;
  if (name == "m5") return FamilyId::m5;
  if (name == "gtilde") return FamilyId::gtilde;
  if (name == "m5t") return FamilyId::m5t;
  throw std::invalid_argument("unknown family: '" + name + "'");
}

std::string family_name(FamilyId fam) {
  switch (fam) {
    case FamilyId::narayana: return "narayana";
    case FamilyId::g2: return "g2";
    case FamilyId::g4: return "g4";
    case FamilyId::g6: return "g6";
    case FamilyId::m2: return "m2";
    case FamilyId::m5: return "m5";
    case FamilyId::gtilde: return "gtilde";
    case FamilyId::m5t: return "m5t";
  }
  throw std::logic_error("bad FamilyId");
}

Int catalan(unsigned n) {
  Int r = algebra::binomial(2L * n, n);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n + 1);
  return r;
}

Int motzkin(unsigned n) {
  // M_0 = 1, M_{n+1} = M_n + sum_{k<n} M_k M_{n-1-k}.
  static std::vector<Int> memo = {1};
  while (memo.size() <= n) {
    size_t m = memo.size() - 1;  // compute M_{m+1}
    Int next = memo[m];
    for (size_t k = 0; k + 1 <= m; ++k) next += memo[k] * memo[m - 1 - k];
    memo.push_back(next);
  }
  return memo[n];
}

Int sequence(const std::string& name, unsigned n) {
  if (name == "catalan") return catalan(n);
  if (name == "motzkin") return motzkin(n);
  throw std::invalid_argument("unknown sequence: '" + name + "'");
}

Int narayana_number(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0 || k > n) return 0;
  Int r = algebra::binomial(n, k) * algebra::binomial(n, k - 1);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n);
  return r;
}

LaurentPoly narayana_poly(unsigned n) {
  LaurentPoly p;
  for (unsigned k = 0; k <= n; ++k)
    p = p + LaurentPoly::term(Rat(narayana_number(n, k)), Monomial::variable("x", k));
  return p;
}

LaurentPoly motzkin_poly(unsigned n) {
  LaurentPoly p;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    Rat c(algebra::binomial(n, 2L * k) * catalan(k));
    p = p + LaurentPoly::term(c, Monomial(std::map<std::string, int>{
                                     {"u", static_cast<int>(k + 1)},
                                     {"v", static_cast<int>(n - 2 * k)}}));
  }
  return p;
}

Int p_explicit(unsigned n, unsigned i, unsigned j) {
  if (n == 0) return 0;
  long ln = n, li = i, lj = j;
  Int prod = algebra::binomial(ln, li) * algebra::binomial(ln - li, lj) *
             algebra::binomial(ln - li - lj, li - 1);
  if (prod == 0) return 0;
  if (!mpz_divisible_ui_p(prod.get_mpz_t(), n))
    throw std::logic_error("leaf-count product not divisible by n");
  mpz_divexact_ui(prod.get_mpz_t(), prod.get_mpz_t(), n);
  return prod;
}

namespace {

LaurentPoly v(const std::string& name, int exp = 1) { return LaurentPoly::variable(name, exp); }
LaurentPoly c(long k) { return LaurentPoly::constant(Rat(k)); }

struct ClosedForm {
  int m = 1;                        // the family polynomial sits at q^(n+m)
  std::vector<LaurentPoly> p;       // numerator polynomial, coefficient list in q
  std::vector<LaurentPoly> r;       // radicand, coefficient list in q
};

// Numerator and radicand of (P - sqrt(R)) / (2 q^m), transcribed family by
// family.  q-degree never exceeds 4.
ClosedForm closed_form(FamilyId fam) {
  switch (fam) {
    case FamilyId::narayana: {
      LaurentPoly x = v("x");
      return {1,
              {c(1), c(1) - x},
              {c(1), (c(1) + x).scaled(-2), (x - c(1)) * (x - c(1))}};
    }
    case FamilyId::g2: {
      LaurentPoly x1 = v("x1"), x2 = v("x2");
      return {1,
              {c(1), c(1) - x2},
              {c(1), (c(1) + x2).scaled(-2),
               c(1) - x1.scaled(4) + x2.scaled(2) + x2 * x2}};
    }
    case FamilyId::g4: {
      LaurentPoly x1 = v("x1"), x2 = v("x2"), y1 = v("y1"), y2 = v("y2");
      return {1,
              {c(1), y2 - x2},
              {c(1), (x2 + y2).scaled(-2), (x2 + y2) * (x2 + y2) - (x1 * y1).scaled(4)}};
    }
    case FamilyId::g6: {
      LaurentPoly x11 = v("x11"), x12 = v("x12"), x2 = v("x2");
      LaurentPoly y11 = v("y11"), y12 = v("y12"), y2 = v("y2");
      LaurentPoly po = x11 * y11, pt = x12 * y12;  // old and twin leaf pair weights
      return {1,
              {c(1), y2 - x2, pt - po},
              {c(1), (x2 + y2).scaled(-2),
               (x2 + y2) * (x2 + y2) - (po + pt).scaled(2),
               (po - pt) * (x2 - y2) * c(2), (po - pt) * (po - pt)}};
    }
    case FamilyId::m2: {
      LaurentPoly u = v("u"), vv = v("v");
      return {2, {c(1), -vv}, {c(1), vv.scaled(-2), vv * vv - u.scaled(4)}};
    }
    case FamilyId::m5: {
      LaurentPoly u1 = v("u1"), u2 = v("u2"), u3 = v("u3"), v1 = v("v1"), v2 = v("v2");
      return {2,
              {c(1), -v1, u3 - u1},
              {c(1), v1.scaled(-2), v1 * v1 - (u1 + u3).scaled(2),
               (u1 * v1 + u3 * v1 - (u2 * v2).scaled(2)).scaled(2),
               (u3 - u1) * (u3 - u1)}};
    }
    case FamilyId::gtilde: {
      LaurentPoly a = v("a"), b = v("b"), cc = v("c"), d = v("d");
      LaurentPoly ti = v("t", -1);
      return {1,
              {ti, d - cc, b - a},
              {v("t", -2), (ti * (cc + d)).scaled(-2),
               (cc + d) * (cc + d) - (ti * (a + b)).scaled(2),
               (a - b) * (cc - d) * c(2), (a - b) * (a - b)}};
    }
    case FamilyId::m5t: {
      LaurentPoly u1 = v("u1"), u2 = v("u2"), u3 = v("u3"), v1 = v("v1"), v2 = v("v2");
      LaurentPoly ti = v("t", -1);
      return {2,
              {ti, -v1, u3 - u1},
              {v("t", -2), (ti * v1).scaled(-2), v1 * v1 - (ti * (u1 + u3)).scaled(2),
               (u1 * v1).scaled(2) + (u3 * v1).scaled(2) - (u2 * v2).scaled(4),
               (u1 - u3) * (u1 - u3)}};
    }
  }
  throw std::logic_error("bad FamilyId");
}

}  // namespace

PowerSeries gf_series(FamilyId fam, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  ClosedForm cf = closed_form(fam);
  int inner = order + cf.m;
  PowerSeries radicand(inner);
  for (size_t i = 0; i < cf.r.size(); ++i)
    if (static_cast<int>(i) <= inner) radicand.set_coeff(static_cast<int>(i), cf.r[i]);
  PowerSeries numerator(inner);
  for (size_t i = 0; i < cf.p.size(); ++i)
    if (static_cast<int>(i) <= inner) numerator.set_coeff(static_cast<int>(i), cf.p[i]);

  PowerSeries diff = numerator - series_sqrt(radicand);
  // P - sqrt(R) must vanish through q^(m-1), otherwise dividing by 2 q^m
  // would not give a power series.
  for (int i = 0; i < cf.m; ++i)
    if (!diff.coeff(i).is_zero())
      throw ConventionViolation("family " + family_name(fam) +
                                ": numerator minus root has a q^" + std::to_string(i) +
                                " term");
  PowerSeries out(order);
  for (int n = 0; n <= order; ++n) out.set_coeff(n, diff.coeff(n + cf.m).scaled(Rat(1, 2)));
  return out;
}

LaurentPoly convention_value(FamilyId fam, int n) {
  if (n != 0 && n != 1) throw std::invalid_argument("convention values exist for n = 0, 1 only");
  auto parse = [](const char* s) { return algebra::parse_poly(s); };
  switch (fam) {
    case FamilyId::narayana: return parse(n == 0 ? "1" : "x");
    case FamilyId::g2: return parse(n == 0 ? "1" : "x1");
    case FamilyId::g4: return parse(n == 0 ? "y2" : "x1*y1");
    case FamilyId::g6: return parse(n == 0 ? "y2" : "x12*y12");
    case FamilyId::m2: return parse(n == 0 ? "u" : "u*v");
    case FamilyId::m5: return parse(n == 0 ? "u3" : "u2*v2");
    case FamilyId::gtilde: return parse(n == 0 ? "d" : "b");
    case FamilyId::m5t: return parse(n == 0 ? "u3" : "t*u2*v2");
  }
  throw std::logic_error("bad FamilyId");
}

const std::map<std::string, std::string>& family_stat_spec(FamilyId fam) {
  static const std::map<FamilyId, std::map<std::string, std::string>> specs = {
      {FamilyId::narayana, {{"leaf", "x"}}},
      {FamilyId::g2, {{"oleaf", "x1"}, {"yleaf", "x2"}}},
      {FamilyId::g4, {{"oleaf", "x1"}, {"yleaf", "x2"}, {"oint", "y1"}, {"yint", "y2"}}},
      {FamilyId::g6,
       {{"sleaf", "x11"},
        {"eleaf", "x12"},
        {"yleaf", "x2"},
        {"sint", "y11"},
        {"eint", "y12"},
        {"yint", "y2"}}},
      {FamilyId::m2, {{"oleaf", "u"}, {"yleaf", "v"}}},
      {FamilyId::m5,
       {{"sleaf", "u1"},
        {"etleaf", "u2"},
        {"entleaf", "u3"},
        {"yerleaf", "v1"},
        {"syleaf", "v2"}}},
      {FamilyId::gtilde,
       {{"sleaf", "a"}, {"eleaf", "b"}, {"yleaf", "c"}, {"yint", "d"}, {"yedge", "t"}}},
      {FamilyId::m5t,
       {{"sleaf", "u1"},
        {"etleaf", "u2"},
        {"entleaf", "u3"},
        {"yerleaf", "v1"},
        {"syleaf", "v2"},
        {"yedge", "t"}}},
  };
  return specs.at(fam);
}

bool family_tip_augmented(FamilyId fam) {
  return fam == FamilyId::m2 || fam == FamilyId::m5 || fam == FamilyId::m5t;
}

int family_edges_for_index(FamilyId fam, int n) {
  return family_tip_augmented(fam) ? n + 1 : n;
}

GammaVector gamma_vector(const LaurentPoly& p) {
  auto vars = p.variables();
  if (vars.size() > 1)
    throw std::invalid_argument("gamma expansion needs a univariate polynomial");
  if (p.has_negative_exponent())
    throw std::invalid_argument("gamma expansion needs nonnegative exponents");
  if (p.is_zero()) {
    return {0, {}};
  }
  std::string var = vars.empty() ? "x" : *vars.begin();

  int lo = 0, hi = 0;
  bool lo_set = false;
  for (auto& [m, cc] : p.terms()) {
    int e = m.exponent(var);
    if (!lo_set || e < lo) lo = e;
    if (!lo_set || e > hi) hi = e;
    lo_set = true;
  }
  int deg = hi - lo;
  std::vector<Rat> f(deg + 1);
  for (auto& [m, cc] : p.terms()) f[m.exponent(var) - lo] = cc;

  for (int i = 0; i <= deg; ++i)
    if (f[i] != f[deg - i])
      throw NotSymmetric("coefficient list is not palindromic around degree " +
                         std::to_string(deg));

  // Peel off gamma_k x^k (1+x)^(deg-2k); palindromicity guarantees the
  // remainder hits zero.
  GammaVector out;
  out.shift = lo;
  std::vector<Rat> work = f;
  for (int k = 0; 2 * k <= deg; ++k) {
    Rat g = work[k];
    out.gammas.push_back(g);
    if (g != 0) {
      for (int i = 0; i <= deg - 2 * k; ++i)
        work[k + i] -= g * Rat(algebra::binomial(deg - 2 * k, i));
    }
  }
  for (auto& w : work)
    if (w != 0) throw std::logic_error("gamma remainder did not vanish");
  return out;
}

}  // namespace gramtree::catalog
