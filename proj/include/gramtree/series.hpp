#pragma once

#include <stdexcept>
#include <vector>

#include "gramtree/poly.hpp"

namespace gramtree::algebra {

struct OrderExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// series_sqrt needs an order-0 coefficient that is a perfect square monomial.
struct NonSquareLeadingTerm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Power series in the reserved variable q, truncated after q^order, with
// Laurent-polynomial coefficients.  Arithmetic truncates to the smaller of
// the two operand orders.
class PowerSeries {
 public:
  explicit PowerSeries(int order);  // zero series
  PowerSeries(int order, std::vector<LaurentPoly> coeffs);

  int order() const { return order_; }
  const LaurentPoly& coeff(int n) const;  // throws OrderExceeded past order
  void set_coeff(int n, LaurentPoly p);

  PowerSeries operator+(const PowerSeries& other) const;
  PowerSeries operator-(const PowerSeries& other) const;
  PowerSeries operator*(const PowerSeries& other) const;

  bool operator==(const PowerSeries& other) const = default;

 private:
  int order_ = 0;
  std::vector<LaurentPoly> coeffs_;  // index n holds the q^n coefficient
};

// Truncated square root with the positive leading scalar.  The order-0
// coefficient must be a single term c*m with c a square rational and every
// exponent of m even; otherwise NonSquareLeadingTerm is thrown.
PowerSeries series_sqrt(const PowerSeries& a);

}  // namespace gramtree::algebra
