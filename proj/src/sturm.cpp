#include <vector>

#include "gramtree/catalog.hpp"

namespace gramtree::catalog {

using algebra::LaurentPoly;
using algebra::Rat;

namespace {

// Dense univariate polynomial, coefficient of x^i at index i, no trailing
// zeros (empty means the zero polynomial).
using Dense = std::vector<Rat>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

Dense derivative(const Dense& p) {
  Dense d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  trim(d);
  return d;
}

// Remainder of a by b, b nonzero.
Dense remainder(Dense a, const Dense& b) {
  while (degree(a) >= degree(b)) {
    Rat q = a.back() / b.back();
    int shift = degree(a) - degree(b);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();  // leading term cancels exactly
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Scale to leading coefficient +-1; positive scaling keeps every sign
// evaluation of the Sturm chain intact and stops coefficient blowup.
void normalize(Dense& p) {
  if (p.empty()) return;
  Rat lead = p.back();
  if (lead < 0) lead = -lead;
  for (auto& c : p) c /= lead;
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
    normalize(b);
  }
  normalize(a);
  return a;
}

// Exact quotient; callers only divide by exact divisors.
Dense quotient(Dense a, const Dense& b) {
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (degree(a) >= degree(b)) {
    Rat c = a.back() / b.back();
    int shift = degree(a) - degree(b);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  trim(q);
  return q;
}

int sign(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

int variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;  // zeros are skipped in a Sturm sign sequence
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

RootReport root_report(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("root report of the zero polynomial");
  auto vars = p.variables();
  if (vars.size() > 1)
    throw std::invalid_argument("root report needs a univariate polynomial");
  if (p.has_negative_exponent())
    throw std::invalid_argument("root report needs nonnegative exponents");
  std::string var = vars.empty() ? "x" : *vars.begin();

  int lo = -1, hi = 0;
  for (auto& [m, c] : p.terms()) {
    int e = m.exponent(var);
    if (lo < 0 || e < lo) lo = e;
    if (e > hi) hi = e;
  }
  // Factor out x^lo; the report concerns the remaining roots.
  Dense f(hi - lo + 1);
  for (auto& [m, c] : p.terms()) f[m.exponent(var) - lo] = c;

  RootReport out;
  if (degree(f) == 0) {
    out.all_real = true;
    return out;
  }

  Dense g = quotient(f, gcd(f, derivative(f)));  // squarefree, g(0) != 0
  out.squarefree_degree = degree(g);

  std::vector<Dense> chain = {g, derivative(g)};
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    Dense r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    normalize(r);
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }

  std::vector<int> at_minus_inf, at_zero, at_plus_inf;
  for (const auto& s : chain) {
    if (s.empty()) continue;
    int lead = sign(s.back());
    at_minus_inf.push_back(degree(s) % 2 == 0 ? lead : -lead);
    at_plus_inf.push_back(lead);
    at_zero.push_back(sign(s.front()));
  }
  out.distinct_real_roots = variations(at_minus_inf) - variations(at_plus_inf);
  out.positive_roots = variations(at_zero) - variations(at_plus_inf);
  out.all_real = out.distinct_real_roots == out.squarefree_degree;
  return out;
}

}  // namespace gramtree::catalog
