#include "gramtree/series.hpp"

#include <algorithm>

namespace gramtree::algebra {

PowerSeries::PowerSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.resize(order + 1);
}

PowerSeries::PowerSeries(int order, std::vector<LaurentPoly> coeffs) : PowerSeries(order) {
  if (coeffs.size() > coeffs_.size())
    throw std::invalid_argument("more coefficients than the order admits");
  std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

const LaurentPoly& PowerSeries::coeff(int n) const {
  if (n < 0 || n > order_)
    throw OrderExceeded("coefficient " + std::to_string(n) + " of a series of order " +
                        std::to_string(order_));
  return coeffs_[n];
}

void PowerSeries::set_coeff(int n, LaurentPoly p) {
  if (n < 0 || n > order_)
    throw OrderExceeded("coefficient " + std::to_string(n) + " of a series of order " +
                        std::to_string(order_));
  coeffs_[n] = std::move(p);
}

PowerSeries PowerSeries::operator+(const PowerSeries& other) const {
  PowerSeries r(std::min(order_, other.order_));
  for (int n = 0; n <= r.order_; ++n) r.coeffs_[n] = coeffs_[n] + other.coeffs_[n];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& other) const {
  PowerSeries r(std::min(order_, other.order_));
  for (int n = 0; n <= r.order_; ++n) r.coeffs_[n] = coeffs_[n] - other.coeffs_[n];
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& other) const {
  PowerSeries r(std::min(order_, other.order_));
  for (int n = 0; n <= r.order_; ++n)
    for (int i = 0; i <= n; ++i) r.coeffs_[n] = r.coeffs_[n] + coeffs_[i] * other.coeffs_[n - i];
  return r;
}

PowerSeries series_sqrt(const PowerSeries& a) {
  const LaurentPoly& a0 = a.coeff(0);
  if (a0.terms().size() != 1)
    throw NonSquareLeadingTerm("order-0 coefficient must be a single term, has " +
                               std::to_string(a0.terms().size()));
  const auto& [m0, c0] = *a0.terms().begin();
  for (auto& [var, e] : m0.exponents())
    if (e % 2 != 0)
      throw NonSquareLeadingTerm("odd exponent of '" + var + "' in the order-0 coefficient");
  if (c0 < 0 || !mpz_perfect_square_p(c0.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(c0.get_den().get_mpz_t()))
    throw NonSquareLeadingTerm("order-0 coefficient " + c0.get_str() +
                               " is not a square rational");

  Rat root;
  mpz_sqrt(root.get_num_mpz_t(), c0.get_num().get_mpz_t());
  mpz_sqrt(root.get_den_mpz_t(), c0.get_den().get_mpz_t());
  root.canonicalize();

  // b0 = sqrt(a0) with positive scalar; then
  // b_n = (a_n - sum_{0<k<n} b_k b_{n-k}) / (2 b0).
  Monomial half_m = m0;
  for (auto& [var, e] : m0.exponents()) half_m = half_m.with_exponent(var, e / 2);
  LaurentPoly b0 = LaurentPoly::term(root, half_m);
  Rat inv2c(1);
  inv2c /= 2 * root;
  Monomial inv_m = half_m.pow(-1);

  PowerSeries b(a.order());
  b.set_coeff(0, b0);
  for (int n = 1; n <= a.order(); ++n) {
    LaurentPoly s = a.coeff(n);
    for (int k = 1; k < n; ++k) s = s - b.coeff(k) * b.coeff(n - k);
    b.set_coeff(n, s.times_term(inv2c, inv_m));
  }
  return b;
}

}  // namespace gramtree::algebra
