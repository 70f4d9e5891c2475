#include "gramtree/grammar.hpp"

#include <sstream>

#include "gramtree/rational.hpp"
#include "gramtree/text.hpp"

namespace gramtree::grammar {

using algebra::LaurentPoly;
using algebra::Monomial;
using algebra::PowerSeries;
using algebra::Rat;

Grammar::Grammar(std::string name, std::map<std::string, LaurentPoly> rules,
                 std::set<std::string> inert)
    : name_(std::move(name)), rules_(std::move(rules)), inert_(std::move(inert)) {
  for (auto& var : inert_) {
    if (!Monomial::valid_variable_name(var))
      throw std::invalid_argument("bad inert variable name: '" + var + "'");
    if (rules_.count(var))
      throw std::invalid_argument("variable '" + var + "' is both ruled and inert");
  }
  for (auto& [var, rhs] : rules_) {
    if (!Monomial::valid_variable_name(var))
      throw std::invalid_argument("bad ruled variable name: '" + var + "'");
    for (auto& used : rhs.variables())
      if (!knows(used))
        throw std::invalid_argument("rule for '" + var + "' uses undeclared variable '" +
                                    used + "'");
  }
}

bool Grammar::knows(const std::string& var) const {
  return rules_.count(var) != 0 || inert_.count(var) != 0;
}

Grammar parse_grammar(const std::string& text, const std::string& name) {
  std::map<std::string, LaurentPoly> rules;
  std::set<std::string> inert;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto is_space = [](unsigned char c) { return std::isspace(c); };
    while (!line.empty() && is_space(line.back())) line.pop_back();
    size_t start = 0;
    while (start < line.size() && is_space(line[start])) ++start;
    line.erase(0, start);
    if (line.empty()) continue;

    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("grammar line " + std::to_string(lineno) + ": " + why);
    };
    if (line.rfind("inert:", 0) == 0) {
      std::istringstream vars(line.substr(6));
      std::string item;
      while (std::getline(vars, item, ',')) {
        std::erase_if(item, is_space);
        if (item.empty()) fail("empty inert variable");
        inert.insert(item);
      }
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos) fail("expected 'var -> poly' or 'inert:'");
    std::string var = line.substr(0, arrow);
    std::erase_if(var, is_space);
    if (!rules.emplace(var, algebra::parse_poly(line.substr(arrow + 2))).second)
      fail("duplicate rule for '" + var + "'");
  }
  return Grammar(name, std::move(rules), std::move(inert));
}

namespace {

const char* kChen4 =
    "x1y1 -> 2*t*x1y1*x2 + 2*t*x1y1*y2\n"
    "x2 -> 2*t*x1y1\n"
    "y2 -> 2*t*x1y1\n"
    "t -> t^2*x2 + t^2*y2\n";

const char* kMotz =
    "t -> t^2*v\n"
    "u -> 2*t*u*v\n"
    "v -> 4*t*u\n";

const char* kSoy =
    "a -> 3*t*a*d + 3*t*b*c\n"
    "b -> 3*t*a*d + 3*t*b*c\n"
    "c -> 2*a\n"
    "d -> 2*b\n"
    "t -> t^2*c + t^2*d\n";

const char* kRmotz =
    "u1 -> 3*t*u2*v2\n"
    "u2 -> 3*t*u2*v1\n"
    "u3 -> 3*t*u2*v2\n"
    "v1 -> 2*u1 + 2*u3\n"
    "v2 -> 4*u1*u2^-1*u3\n"
    "t -> t^2*v1\n";

}  // namespace

bool is_builtin(const std::string& name) {
  return name == "chen4" || name == "motz" || name == "soy" || name == "rmotz";
}

Grammar builtin(const std::string& name) {
  if (name == "chen4") return parse_grammar(kChen4, name);
  if (name == "motz") return parse_grammar(kMotz, name);
  if (name == "soy") return parse_grammar(kSoy, name);
  if (name == "rmotz") return parse_grammar(kRmotz, name);
  throw std::invalid_argument("unknown built-in grammar: '" + name + "'");
}

LaurentPoly derive(const Grammar& g, const LaurentPoly& p) {
  LaurentPoly result;
  for (auto& [m, c] : p.terms()) {
    for (auto& [var, e] : m.exponents()) {
      auto rule = g.rules().find(var);
      if (rule == g.rules().end()) {
        if (g.inert().count(var)) continue;
        throw UnknownVariable("grammar '" + g.name() + "' does not know '" + var + "'");
      }
      // Leibniz on the term: replace var^e by e var^(e-1) D(var).
      LaurentPoly factor =
          LaurentPoly::term(Rat(c * e), m.with_exponent(var, e - 1));
      result = result + factor * rule->second;
    }
  }
  return result;
}

LaurentPoly derive_n(const Grammar& g, const LaurentPoly& p, unsigned n) {
  LaurentPoly r = p;
  for (unsigned i = 0; i < n; ++i) r = derive(g, r);
  return r;
}

PowerSeries gen_series(const Grammar& g, const LaurentPoly& seed, int order) {
  PowerSeries s(order);
  LaurentPoly d = seed;
  algebra::Rat inv_fact(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      d = derive(g, d);
      inv_fact /= n;
    }
    s.set_coeff(n, d.scaled(inv_fact));
  }
  return s;
}

}  // namespace gramtree::grammar
