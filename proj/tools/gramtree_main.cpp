#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gramtree/catalog.hpp"
#include "gramtree/grammar.hpp"
#include "gramtree/text.hpp"
#include "gramtree/tree.hpp"
#include "gramtree/verifier.hpp"

namespace {

using namespace gramtree;

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;

trees::Filter parse_filter(const std::string& name) {
  if (name == "all") return trees::Filter::all;
  if (name == "tip") return trees::Filter::tip_augmented;
  throw CLI::ValidationError("--filter", "expected 'all' or 'tip'");
}

int run_trees(int edges, const std::string& filter, const std::string& format) {
  trees::Filter f = parse_filter(filter);
  if (format == "csv") {
    std::cout << trees::stats_csv(edges, f);
    return 0;
  }
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& enc : trees::enumerate_encodings(edges)) {
      trees::PlaneTree t = trees::decode(enc);
      if (f == trees::Filter::tip_augmented && !trees::is_tip_augmented(t)) continue;
      trees::TreeStats s = trees::classify(t);
      nlohmann::json stats = nlohmann::json::object();
      for (const auto& name : trees::stat_names()) stats[name] = trees::stat_value(s, name);
      rows.push_back({{"encoding", enc}, {"stats", stats}});
    }
    std::cout << nlohmann::json({{"edges", edges}, {"trees", rows}}).dump(2) << '\n';
    return 0;
  }
  // text: edge count first, then one encoding per line
  std::cout << edges << '\n';
  for (const auto& enc : trees::enumerate_encodings(edges)) {
    if (f == trees::Filter::tip_augmented && !trees::is_tip_augmented(trees::decode(enc)))
      continue;
    std::cout << enc << '\n';
  }
  return 0;
}

std::map<std::string, algebra::LaurentPoly> parse_subst_args(
    const std::vector<std::string>& items) {
  std::map<std::string, algebra::LaurentPoly> sigma;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--subst", "expected var=poly, got '" + item + "'");
    std::string var = item.substr(0, eq);
    while (!var.empty() && var.back() == ' ') var.pop_back();
    if (!algebra::Monomial::valid_variable_name(var))
      throw CLI::ValidationError("--subst", "bad variable name '" + var + "'");
    if (!sigma.emplace(var, algebra::parse_poly(item.substr(eq + 1))).second)
      throw CLI::ValidationError("--subst", "variable '" + var + "' appears twice");
  }
  return sigma;
}

void print_poly(const algebra::LaurentPoly& p, const std::string& format) {
  if (format == "json")
    std::cout << algebra::poly_to_json(p).dump(2) << '\n';
  else
    std::cout << algebra::to_text(p) << '\n';
}

int run_poly(const std::string& family, int n, const std::vector<std::string>& subst,
             const std::string& format) {
  catalog::FamilyId fam = catalog::family_from_name(family);
  algebra::LaurentPoly p = catalog::gf_series(fam, n).coeff(n);
  auto sigma = parse_subst_args(subst);
  if (!sigma.empty()) p = p.substitute(sigma);
  print_poly(p, format);
  return 0;
}

int run_derive(const std::string& grammar_arg, const std::string& seed, int n,
               const std::string& format) {
  grammar::Grammar g = [&]() {
    if (grammar::is_builtin(grammar_arg)) return grammar::builtin(grammar_arg);
    std::ifstream in(grammar_arg);
    if (!in) throw std::invalid_argument("cannot open grammar file '" + grammar_arg + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return grammar::parse_grammar(text.str(), grammar_arg);
  }();
  algebra::LaurentPoly p =
      grammar::derive_n(g, algebra::parse_poly(seed), static_cast<unsigned>(n));
  print_poly(p, format);
  return 0;
}

int run_series(const std::string& family, int order, const std::string& format) {
  catalog::FamilyId fam = catalog::family_from_name(family);
  algebra::PowerSeries s = catalog::gf_series(fam, order);
  if (format == "json")
    std::cout << algebra::series_to_json(s).dump(2) << '\n';
  else
    std::cout << algebra::to_text(s);
  return 0;
}

int run_gamma(const std::string& family, int n, const std::string& format) {
  if (family != "narayana")
    throw CLI::ValidationError("--family", "gamma expansion is provided for 'narayana'");
  catalog::GammaVector gv = catalog::gamma_vector(catalog::narayana_poly(n));
  if (format == "json") {
    nlohmann::json gammas = nlohmann::json::array();
    for (auto& g : gv.gammas) gammas.push_back(g.get_str());
    std::cout << nlohmann::json({{"shift", gv.shift}, {"gammas", gammas}}).dump(2) << '\n';
  } else {
    std::cout << "shift: " << gv.shift << '\n' << "gammas:";
    for (auto& g : gv.gammas) std::cout << ' ' << g.get_str();
    std::cout << '\n';
  }
  return 0;
}

algebra::LaurentPoly roots_target(const std::string& family, int n) {
  if (family == "narayana") return catalog::narayana_poly(n);
  if (family == "gx") return trees::weight_sum(n, trees::Filter::all, {{"oleaf", "x"}});
  if (family == "mx")
    return trees::weight_sum(n + 1, trees::Filter::tip_augmented, {{"oleaf", "x"}});
  throw CLI::ValidationError("--family", "expected narayana, gx, or mx");
}

int run_roots(const std::string& family, int n, const std::string& format) {
  catalog::RootReport rr = catalog::root_report(roots_target(family, n));
  if (format == "json") {
    std::cout << nlohmann::json({{"family", family},
                                 {"n", n},
                                 {"all_real", rr.all_real},
                                 {"positive_roots", rr.positive_roots},
                                 {"distinct_real_roots", rr.distinct_real_roots},
                                 {"squarefree_degree", rr.squarefree_degree}})
                     .dump(2)
              << '\n';
  } else {
    std::cout << "family: " << family << '\n'
              << "n: " << n << '\n'
              << "all_real: " << (rr.all_real ? "true" : "false") << '\n'
              << "positive_roots: " << rr.positive_roots << '\n'
              << "distinct_real_roots: " << rr.distinct_real_roots << '\n'
              << "squarefree_degree: " << rr.squarefree_degree << '\n';
  }
  return 0;
}

int run_verify(const std::string& suite, std::optional<int> max_n, const std::string& format) {
  std::vector<verifier::CheckReport> reports = verifier::run_suite(suite, max_n);
  bool ok = true;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
      arr.push_back(verifier::report_to_json(r));
      ok = ok && r.passed;
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      std::cout << verifier::report_line(r) << '\n';
      ok = ok && r.passed;
    }
  }
  return ok ? 0 : kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cross-checked calculus of plane-tree statistic polynomials"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  std::string format = "text";

  auto* trees_cmd = app.add_subcommand("trees", "Enumerate plane trees with statistics");
  int edges = 0;
  std::string filter = "all";
  trees_cmd->add_option("--edges", edges, "Edge count")->required()->check(CLI::Range(0, 16));
  trees_cmd->add_option("--filter", filter, "all or tip");
  trees_cmd->add_option("--format", format, "text, csv, or json");

  auto* poly_cmd = app.add_subcommand("poly", "One family polynomial, optionally substituted");
  std::string family;
  int n = 0;
  std::vector<std::string> subst;
  poly_cmd->add_option("--family", family, "Family name")->required();
  poly_cmd->add_option("--n", n, "Polynomial index")->required()->check(CLI::Range(0, 64));
  poly_cmd->add_option("--subst", subst, "var=poly substitution, repeatable");
  poly_cmd->add_option("--format", format, "text or json");

  auto* derive_cmd = app.add_subcommand("derive", "Iterated grammar derivative of a seed");
  std::string grammar_arg, seed;
  derive_cmd->add_option("--grammar", grammar_arg, "Built-in name or grammar file path")
      ->required();
  derive_cmd->add_option("--seed", seed, "Seed polynomial")->required();
  derive_cmd->add_option("--n", n, "Derivative order")->required()->check(CLI::Range(0, 64));
  derive_cmd->add_option("--format", format, "text or json");

  auto* series_cmd = app.add_subcommand("series", "Truncated closed-form series of a family");
  series_cmd->add_option("--family", family, "Family name")->required();
  int order = 0;
  series_cmd->add_option("--order", order, "Truncation order")->required()
      ->check(CLI::Range(0, 64));
  series_cmd->add_option("--format", format, "text or json");

  auto* gamma_cmd = app.add_subcommand("gamma", "Gamma expansion of a family polynomial");
  gamma_cmd->add_option("--family", family, "Family name")->required();
  gamma_cmd->add_option("--n", n, "Polynomial index")->required()->check(CLI::Range(0, 256));
  gamma_cmd->add_option("--format", format, "text or json");

  auto* roots_cmd = app.add_subcommand("roots", "Exact real-rootedness report");
  roots_cmd->add_option("--family", family, "narayana, gx, or mx")->required();
  roots_cmd->add_option("--n", n, "Polynomial index")->required()->check(CLI::Range(1, 64));
  roots_cmd->add_option("--format", format, "text or json");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  std::optional<int> max_n;
  verify_cmd->add_option("--suite", suite,
                         "all, grammar, gf, identity, symmetry, parity, or roots");
  verify_cmd->add_option("--max-n", max_n, "Override every check's default range")
      ->check(CLI::Range(0, 64));
  verify_cmd->add_option("--format", format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or the parse error
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(trees_cmd)) return run_trees(edges, filter, format);
    if (app.got_subcommand(poly_cmd)) return run_poly(family, n, subst, format);
    if (app.got_subcommand(derive_cmd)) return run_derive(grammar_arg, seed, n, format);
    if (app.got_subcommand(series_cmd)) return run_series(family, order, format);
    if (app.got_subcommand(gamma_cmd)) return run_gamma(family, n, format);
    if (app.got_subcommand(roots_cmd)) return run_roots(family, n, format);
    if (app.got_subcommand(verify_cmd)) return run_verify(suite, max_n, format);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
