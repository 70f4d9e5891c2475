#include "gramtree/monomial.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace gramtree::algebra {

namespace {

void check_exponent_range(long long e, const char* op) {
  if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min())
    throw std::overflow_error(std::string("exponent overflow in ") + op);
}

}  // namespace

bool Monomial::valid_variable_name(const std::string& name) {
  if (name.empty() || name == "q") return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Monomial::Monomial(std::map<std::string, int> exps) {
  for (auto& [var, e] : exps) {
    if (!valid_variable_name(var))
      throw std::invalid_argument("bad variable name: '" + var + "'");
    if (e != 0) exps_.emplace(var, e);
  }
}

Monomial Monomial::variable(const std::string& name, int exp) {
  return Monomial(std::map<std::string, int>{{name, exp}});
}

int Monomial::exponent(const std::string& var) const {
  auto it = exps_.find(var);
  return it == exps_.end() ? 0 : it->second;
}

long long Monomial::total_degree() const {
  long long d = 0;
  for (auto& [var, e] : exps_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial r = *this;
  for (auto& [var, e] : other.exps_) {
    long long sum = static_cast<long long>(r.exponent(var)) + e;
    check_exponent_range(sum, "times");
    if (sum == 0)
      r.exps_.erase(var);
    else
      r.exps_[var] = static_cast<int>(sum);
  }
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  if (k == 0) return r;
  for (auto& [var, e] : exps_) {
    long long scaled = static_cast<long long>(e) * k;
    check_exponent_range(scaled, "pow");
    r.exps_.emplace(var, static_cast<int>(scaled));
  }
  return r;
}

Monomial Monomial::with_exponent(const std::string& var, int exp) const {
  Monomial r = *this;
  if (exp == 0)
    r.exps_.erase(var);
  else {
    if (!valid_variable_name(var))
      throw std::invalid_argument("bad variable name: '" + var + "'");
    r.exps_[var] = exp;
  }
  return r;
}

bool Monomial::operator<(const Monomial& other) const {
  long long da = total_degree(), db = other.total_degree();
  if (da != db) return da < db;
  auto ia = exps_.begin(), ib = other.exps_.begin();
  while (ia != exps_.end() || ib != other.exps_.end()) {
    // Walk the union of names in ascending order; a missing name means
    // exponent 0 there.
    int ea, eb;
    if (ib == other.exps_.end() || (ia != exps_.end() && ia->first < ib->first)) {
      ea = ia->second;
      eb = 0;
      ++ia;
    } else if (ia == exps_.end() || ib->first < ia->first) {
      ea = 0;
      eb = ib->second;
      ++ib;
    } else {
      ea = ia->second;
      eb = ib->second;
      ++ia;
      ++ib;
    }
    if (ea != eb) return ea < eb;
  }
  return false;
}

}  // namespace gramtree::algebra
