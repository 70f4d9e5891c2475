#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "gramtree/monomial.hpp"
#include "gramtree/rational.hpp"

namespace gramtree::algebra {

// Substitution image for a negatively-powered variable must be a nonzero
// single-term polynomial; anything else has no Laurent inverse.
struct NonInvertibleSubstitution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Multivariate Laurent polynomial with rational coefficients, kept canonical:
// no zero coefficients, terms ordered by Monomial::operator<.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero

  static LaurentPoly constant(const Rat& c);
  static LaurentPoly variable(const std::string& name, int exp = 1);
  static LaurentPoly term(const Rat& coeff, const Monomial& m);

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Monomial& m) const;  // 0 when the monomial is absent

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-() const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly scaled(const Rat& c) const;
  LaurentPoly times_term(const Rat& coeff, const Monomial& m) const;
  LaurentPoly pow(unsigned k) const;

  bool operator==(const LaurentPoly& other) const = default;

  // Simultaneous substitution; variables absent from the map stay fixed.
  LaurentPoly substitute(const std::map<std::string, LaurentPoly>& sigma) const;

  std::set<std::string> variables() const;
  bool has_negative_exponent() const;

 private:
  void add_term(const Monomial& m, const Rat& c);

  std::map<Monomial, Rat> terms_;
};

}  // namespace gramtree::algebra
