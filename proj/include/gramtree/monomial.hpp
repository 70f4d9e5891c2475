#pragma once

#include <map>
#include <string>

namespace gramtree::algebra {

// A Laurent monomial: finite product of variables raised to nonzero integer
// exponents.  Zero exponents are never stored, so equal monomials compare
// equal structurally.  Variable names match [A-Za-z_][A-Za-z0-9_]* and the
// name "q" is reserved for the series variable and rejected here.
class Monomial {
 public:
  Monomial() = default;  // the empty product
  explicit Monomial(std::map<std::string, int> exps);

  static Monomial variable(const std::string& name, int exp = 1);
  static bool valid_variable_name(const std::string& name);

  const std::map<std::string, int>& exponents() const { return exps_; }
  int exponent(const std::string& var) const;
  bool is_constant() const { return exps_.empty(); }
  long long total_degree() const;

  Monomial times(const Monomial& other) const;
  Monomial pow(int k) const;
  Monomial with_exponent(const std::string& var, int exp) const;

  bool operator==(const Monomial& other) const = default;

  // Graded order: lower total degree first, ties broken by walking variable
  // names in ascending order and putting the smaller exponent first.
  bool operator<(const Monomial& other) const;

 private:
  std::map<std::string, int> exps_;
};

}  // namespace gramtree::algebra
