#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "gramtree/series.hpp"

namespace gramtree::grammar {

// A variable showed up that the grammar neither rewrites nor declares inert.
struct UnknownVariable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A context-free grammar in the differential-operator sense: each ruled
// variable v has an image D(v), inert variables have D(v) = 0, and D extends
// to Laurent polynomials linearly and by the Leibniz rule, with
// D(v^k) = k v^(k-1) D(v) for every integer k.
class Grammar {
 public:
  Grammar(std::string name, std::map<std::string, algebra::LaurentPoly> rules,
          std::set<std::string> inert);

  const std::string& name() const { return name_; }
  const std::map<std::string, algebra::LaurentPoly>& rules() const { return rules_; }
  const std::set<std::string>& inert() const { return inert_; }
  bool knows(const std::string& var) const;

 private:
  std::string name_;
  std::map<std::string, algebra::LaurentPoly> rules_;
  std::set<std::string> inert_;
};

// Text format, one item per line: "var -> poly" rules (poly per parse_poly),
// "inert: a, b" declarations, '#' comments, blank lines ignored.
Grammar parse_grammar(const std::string& text, const std::string& name);

// Built-in grammars: "chen4", "motz", "soy", "rmotz".
Grammar builtin(const std::string& name);
bool is_builtin(const std::string& name);

algebra::LaurentPoly derive(const Grammar& g, const algebra::LaurentPoly& p);
algebra::LaurentPoly derive_n(const Grammar& g, const algebra::LaurentPoly& p, unsigned n);

// Sum over n <= order of D^n(seed)/n! q^n.
algebra::PowerSeries gen_series(const Grammar& g, const algebra::LaurentPoly& seed, int order);

}  // namespace gramtree::grammar
