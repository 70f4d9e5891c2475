#include "gramtree/verifier.hpp"

#include <functional>
#include <sstream>

#include "gramtree/grammar.hpp"
#include "gramtree/rational.hpp"
#include "gramtree/text.hpp"
#include "gramtree/tree.hpp"

namespace gramtree::verifier {

using algebra::Int;
using algebra::LaurentPoly;
using algebra::Monomial;
using algebra::Rat;
using catalog::FamilyId;

nlohmann::json report_to_json(const CheckReport& r) {
  nlohmann::json j = {{"check_id", r.check_id},
                      {"range", r.range},
                      {"passed", r.passed},
                      {"first_failure", nullptr}};
  if (r.first_failure)
    j["first_failure"] = {{"n", r.first_failure->n},
                          {"expected", r.first_failure->expected},
                          {"actual", r.first_failure->actual}};
  return j;
}

std::string report_line(const CheckReport& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << r.check_id << " (" << r.range << ")";
  if (r.first_failure)
    out << " first failure at n=" << r.first_failure->n << ": expected "
        << r.first_failure->expected << ", actual " << r.first_failure->actual;
  return out.str();
}

namespace {

// The family's n-th polynomial on the tree route, with the fixed low-index
// values standing in below n = 2.
LaurentPoly expected_family_value(FamilyId fam, int n) {
  if (n < 2) return catalog::convention_value(fam, n);
  return trees::weight_sum(catalog::family_edges_for_index(fam, n),
                           catalog::family_tip_augmented(fam) ? trees::Filter::tip_augmented
                                                              : trees::Filter::all,
                           catalog::family_stat_spec(fam));
}

struct Runner {
  CheckReport report;

  Runner(std::string check_id, std::string range) {
    report.check_id = std::move(check_id);
    report.range = std::move(range);
    report.passed = true;
  }

  // Records the first mismatch and stops the scan.
  bool step(int n, const LaurentPoly& expected, const LaurentPoly& actual) {
    if (expected == actual) return true;
    report.passed = false;
    report.first_failure = {n, to_text(expected), to_text(actual)};
    return false;
  }

  bool step_int(int n, const Int& expected, const Int& actual) {
    if (expected == actual) return true;
    report.passed = false;
    report.first_failure = {n, expected.get_str(), actual.get_str()};
    return false;
  }

  bool step_fact(int n, const std::string& expected, const std::string& actual) {
    if (expected == actual) return true;
    report.passed = false;
    report.first_failure = {n, expected, actual};
    return false;
  }
};

std::string range_text(int lo, int hi, const char* var = "n") {
  return std::to_string(lo) + " <= " + var + " <= " + std::to_string(hi);
}

LaurentPoly substitute_vars(const LaurentPoly& p,
                            const std::map<std::string, std::string>& renames) {
  std::map<std::string, LaurentPoly> sigma;
  for (auto& [from, to] : renames) sigma.emplace(from, LaurentPoly::variable(to));
  return p.substitute(sigma);
}

}  // namespace

CheckReport check_grammar(const std::string& grammar_name, int n_max) {
  struct Setup {
    FamilyId tag;
    LaurentPoly seed;
    int n_lo;
    int fact_shift;   // divide D^n(seed) by (n + fact_shift)!
    bool divide_tn;   // additionally divide by t^n
    int index_shift;  // family index = n + index_shift
  };
  Setup setup = [&]() -> Setup {
    if (grammar_name == "chen4")
      return {FamilyId::g4, algebra::parse_poly("y2"), 0, 1, true, 0};
    if (grammar_name == "motz")
      return {FamilyId::m2, algebra::parse_poly("1/2*v"), 1, 1, true, -1};
    if (grammar_name == "soy")
      return {FamilyId::gtilde, algebra::parse_poly("d"), 0, 1, false, 0};
    if (grammar_name == "rmotz")
      return {FamilyId::m5t, algebra::parse_poly("2*u3"), 0, 2, false, 0};
    throw std::invalid_argument("unknown grammar check: '" + grammar_name + "'");
  }();

  Runner run("grammar:" + grammar_name, range_text(setup.n_lo, n_max));
  grammar::Grammar g = grammar::builtin(grammar_name);
  LaurentPoly d = setup.seed;
  for (int i = 0; i < setup.n_lo; ++i) d = grammar::derive(g, d);
  for (int n = setup.n_lo; n <= n_max; ++n) {
    Rat norm(1);
    norm /= Rat(algebra::factorial(n + setup.fact_shift));
    Monomial tshift =
        setup.divide_tn ? Monomial::variable("t", -n) : Monomial();
    LaurentPoly actual = d.times_term(norm, tshift);
    if (grammar_name == "chen4")
      actual = actual.substitute({{"x1y1", algebra::parse_poly("x1*y1")}});
    if (!run.step(n, expected_family_value(setup.tag, n + setup.index_shift), actual)) break;
    d = grammar::derive(g, d);
  }
  return run.report;
}

CheckReport check_gf(FamilyId fam, int order) {
  Runner run("gf:" + catalog::family_name(fam), range_text(0, order));
  algebra::PowerSeries s = catalog::gf_series(fam, order);
  for (int n = 0; n <= order; ++n)
    if (!run.step(n, expected_family_value(fam, n), s.coeff(n))) break;
  return run.report;
}

namespace {

LaurentPoly motzkin_in(unsigned n, const LaurentPoly& u_image, const LaurentPoly& v_image) {
  return catalog::motzkin_poly(n).substitute({{"u", u_image}, {"v", v_image}});
}

CheckReport identity_coker(int n_max) {
  Runner run("identity:coker", range_text(0, n_max));
  LaurentPoly x = LaurentPoly::variable("x");
  LaurentPoly one_plus_x = LaurentPoly::constant(1) + x;
  for (int n = 0; n <= n_max; ++n)
    if (!run.step(n, catalog::narayana_poly(n + 1), motzkin_in(n, x, one_plus_x))) break;
  return run.report;
}

CheckReport identity_coker_gamma(int n_max) {
  Runner run("identity:coker_gamma", range_text(1, n_max));
  for (int n = 1; n <= n_max; ++n) {
    catalog::GammaVector gv = catalog::gamma_vector(catalog::narayana_poly(n));
    std::vector<Rat> expected;
    for (int j = 0; 2 * j <= n - 1; ++j)
      expected.push_back(Rat(algebra::binomial(n - 1, 2L * j) * catalog::catalan(j)));
    bool ok = gv.shift == 1 && gv.gammas == expected;
    if (!ok) {
      std::ostringstream want, got;
      want << "shift 1, gammas";
      for (auto& g : expected) want << ' ' << g.get_str();
      got << "shift " << gv.shift << ", gammas";
      for (auto& g : gv.gammas) got << ' ' << g.get_str();
      run.step_fact(n, want.str(), got.str());
      break;
    }
  }
  return run.report;
}

CheckReport identity_chen_rel(int n_max) {
  Runner run("identity:chen_rel", range_text(0, n_max));
  LaurentPoly x1 = LaurentPoly::variable("x1");
  LaurentPoly rhs_v = LaurentPoly::constant(1) + LaurentPoly::variable("x2");
  for (int n = 0; n <= n_max; ++n)
    if (!run.step(n, expected_family_value(FamilyId::g2, n + 1), motzkin_in(n, x1, rhs_v)))
      break;
  return run.report;
}

CheckReport identity_four_var(int n_max) {
  Runner run("identity:four_var", range_text(0, n_max));
  LaurentPoly u_img = algebra::parse_poly("x1*y1");
  LaurentPoly v_img = algebra::parse_poly("x2 + y2");
  for (int n = 0; n <= n_max; ++n)
    if (!run.step(n, expected_family_value(FamilyId::g4, n + 1), motzkin_in(n, u_img, v_img)))
      break;
  return run.report;
}

CheckReport identity_refined_coker(int n_max) {
  Runner run("identity:refined_coker", range_text(1, n_max));
  algebra::PowerSeries m5 = catalog::gf_series(FamilyId::m5, n_max);
  std::map<std::string, LaurentPoly> sigma = {
      {"u1", algebra::parse_poly("x11*y11")},
      {"u2", algebra::parse_poly("x12*y12*x2 + x11*y11*y2")},
      {"u3", algebra::parse_poly("x12*y12")},
      {"v1", algebra::parse_poly("x2 + y2")},
      {"v2", algebra::parse_poly("1")},
  };
  for (int n = 1; n <= n_max; ++n)
    if (!run.step(n, expected_family_value(FamilyId::g6, n + 1), m5.coeff(n).substitute(sigma)))
      break;
  return run.report;
}

CheckReport identity_lin_kim(int n_max) {
  Runner run("identity:lin_kim", range_text(0, n_max));
  LaurentPoly u4 = algebra::parse_poly("x1*y1");
  LaurentPoly x2 = LaurentPoly::variable("x2");
  LaurentPoly y2 = LaurentPoly::variable("y2");
  LaurentPoly x = LaurentPoly::variable("x");
  for (int n = 0; n <= n_max; ++n) {
    LaurentPoly rhs4, rhs1;
    for (int i = 0; i <= n; ++i) {
      Rat binom(algebra::binomial(n, i));
      rhs4 = rhs4 + (y2.pow(i) * motzkin_in(n - i, u4, x2)).scaled(binom);
      rhs1 = rhs1 + motzkin_in(i, x, x).scaled(Rat(algebra::binomial(n, i)));
    }
    if (!run.step(n, expected_family_value(FamilyId::g4, n + 1), rhs4)) break;
    if (!run.step(n, catalog::narayana_poly(n + 1), rhs1)) break;
  }
  return run.report;
}

CheckReport identity_donaghey(int n_max) {
  Runner run("identity:donaghey", range_text(0, n_max));
  std::map<std::string, LaurentPoly> pin = {{"y1", LaurentPoly::constant(1)},
                                            {"y2", LaurentPoly()}};
  LaurentPoly x1 = LaurentPoly::variable("x1");
  LaurentPoly x2 = LaurentPoly::variable("x2");
  for (int n = 0; n <= n_max; ++n)
    if (!run.step(n, motzkin_in(n, x1, x2),
                  expected_family_value(FamilyId::g4, n + 1).substitute(pin)))
      break;
  return run.report;
}

CheckReport identity_euler(int n_max) {
  Runner run("identity:euler", range_text(0, n_max));
  for (int n = 0; n <= n_max; ++n) {
    Int even_sum = 0;
    for (int k = 0; 2 * k <= n; ++k)
      even_sum += algebra::binomial(n, 2L * k) * catalog::catalan(k);
    if (!run.step_int(n, catalog::motzkin(n), even_sum)) break;
    Int full_sum = 0;
    for (int k = 0; k <= n; ++k) full_sum += algebra::binomial(n, k) * catalog::motzkin(k);
    if (!run.step_int(n, catalog::catalan(n + 1), full_sum)) break;
  }
  return run.report;
}

CheckReport identity_motzkin_rec(int n_max) {
  Runner run("identity:motzkin_rec", range_text(0, n_max));
  // Run the recurrence on the binomial closed form, which is computed
  // independently of the memoized sequence.
  auto closed = [](int n) {
    Int s = 0;
    for (int k = 0; 2 * k <= n; ++k) s += algebra::binomial(n, 2L * k) * catalog::catalan(k);
    return s;
  };
  if (!run.step_int(0, 1, closed(0))) return run.report;
  for (int n = 0; n < n_max; ++n) {
    Int rhs = closed(n);
    for (int k = 0; k <= n - 1; ++k) rhs += closed(k) * closed(n - 1 - k);
    if (!run.step_int(n + 1, closed(n + 1), rhs)) break;
  }
  return run.report;
}

}  // namespace

CheckReport check_identity(const std::string& id, int n_max) {
  if (id == "coker") return identity_coker(n_max);
  if (id == "coker_gamma") return identity_coker_gamma(n_max);
  if (id == "chen_rel") return identity_chen_rel(n_max);
  if (id == "four_var") return identity_four_var(n_max);
  if (id == "refined_coker") return identity_refined_coker(n_max);
  if (id == "lin_kim") return identity_lin_kim(n_max);
  if (id == "donaghey") return identity_donaghey(n_max);
  if (id == "euler") return identity_euler(n_max);
  if (id == "motzkin_rec") return identity_motzkin_rec(n_max);
  throw UnknownIdentity("unknown identity: '" + id + "'");
}

CheckReport check_symmetry(const std::string& id, int n_max) {
  if (id == "narayana_sym") {
    Runner run("symmetry:narayana_sym", range_text(1, n_max));
    for (int n = 1; n <= n_max; ++n)
      if (!run.step(n, trees::weight_sum(n, trees::Filter::all, {{"leaf", "x"}}),
                    trees::weight_sum(n, trees::Filter::all, {{"interior", "x"}})))
        break;
    return run.report;
  }
  if (id == "six_var_sym") {
    Runner run("symmetry:six_var_sym", range_text(2, n_max));
    std::map<std::string, std::string> swap = {{"x11", "x12"}, {"x12", "x11"},
                                               {"y11", "y12"}, {"y12", "y11"},
                                               {"x2", "y2"},   {"y2", "x2"}};
    for (int n = 2; n <= n_max; ++n) {
      LaurentPoly p = trees::weight_sum(n, trees::Filter::all,
                                        catalog::family_stat_spec(FamilyId::g6));
      if (!run.step(n, p, substitute_vars(p, swap))) break;
    }
    return run.report;
  }
  if (id == "old_young_sym") {
    Runner run("symmetry:old_young_sym", range_text(2, n_max));
    for (int n = 2; n <= n_max; ++n) {
      LaurentPoly old_pair =
          trees::weight_sum(n, trees::Filter::all, {{"sleaf", "x11"}, {"eleaf", "x12"}});
      if (!run.step(n, old_pair, substitute_vars(old_pair, {{"x11", "x12"}, {"x12", "x11"}})))
        break;
      LaurentPoly young_pair =
          trees::weight_sum(n, trees::Filter::all, {{"yleaf", "x2"}, {"yint", "y2"}});
      if (!run.step(n, young_pair, substitute_vars(young_pair, {{"x2", "y2"}, {"y2", "x2"}})))
        break;
    }
    return run.report;
  }
  if (id == "tapt_sym") {
    Runner run("symmetry:tapt_sym", range_text(3, n_max, "edges"));
    for (int e = 3; e <= n_max; ++e) {
      LaurentPoly p = trees::weight_sum(e, trees::Filter::tip_augmented,
                                        catalog::family_stat_spec(FamilyId::m5));
      if (!run.step(e, p, substitute_vars(p, {{"u1", "u3"}, {"u3", "u1"}}))) break;
    }
    return run.report;
  }
  throw UnknownIdentity("unknown symmetry: '" + id + "'");
}

CheckReport check_parity(int n_max) {
  Runner run("parity", range_text(1, n_max));
  std::map<std::string, LaurentPoly> minus_one = {{"x", LaurentPoly::constant(-1)}};
  for (int n = 1; n <= n_max; ++n) {
    LaurentPoly val =
        trees::weight_sum(n, trees::Filter::all, {{"leaf", "x"}}).substitute(minus_one);
    Rat d = val.coeff(Monomial());
    Rat want(0);
    if (n % 2 == 1) {
      int m = (n - 1) / 2;
      want = Rat(catalog::catalan(m));
      if (m % 2 == 0) want = -want;  // sign (-1)^(m+1)
    }
    if (!run.step(n, LaurentPoly::constant(want), val)) break;

    // Central old-leaf coefficient at odd edge counts.
    if (n % 2 == 1) {
      int m = (n - 1) / 2;
      LaurentPoly old_hist = trees::weight_sum(n, trees::Filter::all, {{"oleaf", "x"}});
      Rat central = old_hist.coeff(Monomial::variable("x", m + 1));
      if (!run.step(n, LaurentPoly::constant(Rat(catalog::catalan(m))),
                    LaurentPoly::constant(central)))
        break;
    }

    // Low old-leaf coefficients vanish once young leaves are signed.
    LaurentPoly signed_hist =
        trees::weight_sum(n, trees::Filter::all, {{"oleaf", "x1"}, {"yleaf", "x2"}})
            .substitute({{"x2", LaurentPoly::constant(-1)}});
    bool ok = true;
    for (int m = 1; 2 * m <= n; ++m) {
      Rat c = signed_hist.coeff(Monomial::variable("x1", m));
      if (c != 0) {
        run.step_fact(n, "0 at x1^" + std::to_string(m), c.get_str());
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  return run.report;
}

CheckReport check_realroots(int n_max) {
  Runner run("realroots", range_text(1, n_max));
  for (int n = 1; n <= n_max; ++n) {
    struct Target {
      const char* label;
      LaurentPoly poly;
    };
    Target targets[] = {
        {"narayana", catalog::narayana_poly(n)},
        {"old-leaf", trees::weight_sum(n, trees::Filter::all, {{"oleaf", "x"}})},
        {"tip-augmented old-leaf",
         trees::weight_sum(n + 1, trees::Filter::tip_augmented, {{"oleaf", "x"}})},
    };
    bool ok = true;
    for (const auto& t : targets) {
      catalog::RootReport rr = catalog::root_report(t.poly);
      if (!rr.all_real || rr.positive_roots != 0) {
        run.step_fact(n, std::string(t.label) + ": all roots real, none positive",
                      std::string("all_real=") + (rr.all_real ? "true" : "false") +
                          " positive_roots=" + std::to_string(rr.positive_roots));
        ok = false;
        break;
      }
    }
    if (!ok) break;
    catalog::GammaVector gv = catalog::gamma_vector(catalog::narayana_poly(n));
    for (size_t j = 0; j < gv.gammas.size(); ++j) {
      if (gv.gammas[j] < 0) {
        run.step_fact(n, "gamma_" + std::to_string(j) + " >= 0", gv.gammas[j].get_str());
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  return run.report;
}

std::vector<CheckReport> run_suite(const std::string& suite, std::optional<int> max_n) {
  auto pick = [&](int dflt) { return max_n.value_or(dflt); };
  std::vector<CheckReport> out;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "grammar") {
    known = true;
    for (const char* g : {"chen4", "motz", "soy", "rmotz"})
      out.push_back(check_grammar(g, pick(9)));
  }
  if (all || suite == "gf") {
    known = true;
    for (const auto& name : catalog::family_names())
      out.push_back(check_gf(catalog::family_from_name(name), pick(10)));
  }
  if (all || suite == "identity") {
    known = true;
    out.push_back(check_identity("coker", pick(9)));
    out.push_back(check_identity("coker_gamma", pick(12)));
    out.push_back(check_identity("chen_rel", pick(9)));
    out.push_back(check_identity("four_var", pick(9)));
    out.push_back(check_identity("refined_coker", pick(9)));
    out.push_back(check_identity("lin_kim", pick(9)));
    out.push_back(check_identity("donaghey", pick(9)));
    out.push_back(check_identity("euler", pick(20)));
    out.push_back(check_identity("motzkin_rec", pick(20)));
  }
  if (all || suite == "symmetry") {
    known = true;
    out.push_back(check_symmetry("narayana_sym", pick(9)));
    out.push_back(check_symmetry("six_var_sym", pick(9)));
    out.push_back(check_symmetry("old_young_sym", pick(9)));
    out.push_back(check_symmetry("tapt_sym", pick(10)));
  }
  if (all || suite == "parity") {
    known = true;
    out.push_back(check_parity(pick(12)));
  }
  if (all || suite == "roots") {
    known = true;
    out.push_back(check_realroots(pick(12)));
  }
  if (!known) throw std::invalid_argument("unknown suite: '" + suite + "'");
  return out;
}

}  // namespace gramtree::verifier
