#include "gramtree/poly.hpp"

namespace gramtree::algebra {

namespace {

// GMP rational arithmetic assumes canonical operands; coefficients coming in
// through the public surface get reduced here once.
Rat canon(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c;
}

// c^k for integer k; k < 0 requires c != 0.
Rat rat_pow(const Rat& c, int k) {
  if (k == 0) return Rat(1);
  unsigned long a = k < 0 ? -static_cast<long>(k) : k;
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), c.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), c.get_den().get_mpz_t(), a);
  r.canonicalize();
  if (k < 0) r = 1 / r;
  return r;
}

}  // namespace

void LaurentPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::constant(const Rat& c) { return term(c, Monomial()); }

LaurentPoly LaurentPoly::variable(const std::string& name, int exp) {
  return term(Rat(1), Monomial::variable(name, exp));
}

LaurentPoly LaurentPoly::term(const Rat& coeff, const Monomial& m) {
  LaurentPoly p;
  p.add_term(m, canon(coeff));
  return p;
}

Rat LaurentPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  for (auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  for (auto& [m, c] : other.terms_) r.add_term(m, Rat(-c));
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly r;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : other.terms_) r.add_term(ma.times(mb), Rat(ca * cb));
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  LaurentPoly r;
  Rat cc = canon(c);
  if (cc == 0) return r;
  for (auto& [m, k] : terms_) r.terms_.emplace(m, Rat(k * cc));
  return r;
}

LaurentPoly LaurentPoly::times_term(const Rat& coeff, const Monomial& m) const {
  LaurentPoly r;
  Rat cc = canon(coeff);
  if (cc == 0) return r;
  for (auto& [mm, c] : terms_) r.terms_.emplace(mm.times(m), Rat(c * cc));
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = constant(Rat(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& sigma) const {
  LaurentPoly result;
  for (auto& [m, c] : terms_) {
    LaurentPoly product = constant(c);
    Monomial fixed;  // factors whose variables are not substituted
    for (auto& [var, e] : m.exponents()) {
      auto img = sigma.find(var);
      if (img == sigma.end()) {
        fixed = fixed.times(Monomial::variable(var, e));
      } else if (e >= 0) {
        product = product * img->second.pow(static_cast<unsigned>(e));
      } else {
        // A negative power only makes sense when the image is invertible,
        // i.e. a single nonzero term.
        const auto& terms = img->second.terms();
        if (terms.size() != 1)
          throw NonInvertibleSubstitution("image of '" + var +
                                          "' has no inverse: " +
                                          std::to_string(terms.size()) + " terms");
        const auto& [im, ic] = *terms.begin();
        product = product.times_term(rat_pow(ic, e), im.pow(e));
      }
    }
    result = result + product.times_term(Rat(1), fixed);
  }
  return result;
}

std::set<std::string> LaurentPoly::variables() const {
  std::set<std::string> vars;
  for (auto& [m, c] : terms_)
    for (auto& [var, e] : m.exponents()) vars.insert(var);
  return vars;
}

bool LaurentPoly::has_negative_exponent() const {
  for (auto& [m, c] : terms_)
    for (auto& [var, e] : m.exponents())
      if (e < 0) return true;
  return false;
}

}  // namespace gramtree::algebra
