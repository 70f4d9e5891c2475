#include "gramtree/text.hpp"

#include <cctype>
#include <sstream>

namespace gramtree::algebra {

namespace {

std::string term_text(const Monomial& m, const Rat& c) {
  std::string out = rational_text(c);
  for (auto& [var, e] : m.exponents()) {
    out += '*';
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += term_text(m, c);
  }
  return out;
}

std::string to_text(const PowerSeries& s) {
  std::ostringstream out;
  out << "order: " << s.order() << '\n';
  for (int n = 0; n <= s.order(); ++n) out << "q^" << n << ": " << to_text(s.coeff(n)) << '\n';
  return out.str();
}

namespace {

// Hand-rolled scanner: the grammar is small and the error positions matter.
struct Scanner {
  const std::string& text;
  size_t pos = 0;

  explicit Scanner(const std::string& t) : text(t) { skip_ws(); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument(why + " at position " + std::to_string(pos) + " in '" + text +
                                "'");
  }

  bool accept(char c) {
    if (!done() && text[pos] == c) {
      ++pos;
      skip_ws();
      return true;
    }
    return false;
  }

  std::string number() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      size_t den = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == den) fail("expected denominator digits");
    }
    std::string tok = text.substr(start, pos - start);
    skip_ws();
    return tok;
  }

  std::string name() {
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string tok = text.substr(start, pos - start);
    skip_ws();
    return tok;
  }

  int integer() {
    bool neg = accept('-');
    if (!neg) accept('+');
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) fail("exponent out of range");
      ++pos;
    }
    skip_ws();
    return static_cast<int>(neg ? -v : v);
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
  Scanner sc(text);
  if (sc.done()) sc.fail("empty polynomial");
  LaurentPoly result;
  bool first = true;
  while (true) {
    Rat sign(1);
    if (sc.accept('-'))
      sign = -1;
    else if (!sc.accept('+') && !first)
      sc.fail("expected '+' or '-'");
    // Canonical text writes negative coefficients after " + ", so one more
    // sign may precede the term itself.
    if (sc.accept('-')) sign = -sign;
    if (sc.done()) sc.fail("dangling sign");
    first = false;

    Rat coeff = sign;
    std::map<std::string, long long> raw_exps;
    bool expect_factor = true;
    bool saw_anything = false;
    while (expect_factor) {
      if (!sc.done() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        coeff *= parse_rational(sc.number());
      } else if (!sc.done() && (std::isalpha(static_cast<unsigned char>(sc.peek())) ||
                                sc.peek() == '_')) {
        std::string var = sc.name();
        if (!Monomial::valid_variable_name(var)) sc.fail("bad variable name '" + var + "'");
        int e = sc.accept('^') ? sc.integer() : 1;
        raw_exps[var] += e;
        if (raw_exps[var] > 1'000'000 || raw_exps[var] < -1'000'000)
          sc.fail("exponent out of range");
      } else {
        sc.fail("expected a coefficient or a variable");
      }
      saw_anything = true;
      expect_factor = sc.accept('*');
    }
    if (!saw_anything) sc.fail("empty term");
    std::map<std::string, int> exps;
    for (auto& [var, e] : raw_exps) exps[var] = static_cast<int>(e);
    result = result + LaurentPoly::term(coeff, Monomial(exps));
    if (sc.done()) break;
    if (sc.peek() != '+' && sc.peek() != '-') sc.fail("unexpected character");
  }
  return result;
}

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (auto& [var, e] : m.exponents()) exps[var] = e;
    terms.push_back({{"coeff", rational_text(c)}, {"exps", exps}});
  }
  return {{"terms", terms}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("polynomial JSON must be {\"terms\": [...]}");
  LaurentPoly p;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") ||
        !t["exps"].is_object())
      throw std::invalid_argument("each term needs a coeff string and an exps object");
    std::map<std::string, int> exps;
    for (auto it = t["exps"].begin(); it != t["exps"].end(); ++it) {
      if (!it.value().is_number_integer())
        throw std::invalid_argument("exponents must be integers");
      exps[it.key()] = it.value().get<int>();
    }
    p = p + LaurentPoly::term(parse_rational(t["coeff"].get<std::string>()), Monomial(exps));
  }
  return p;
}

nlohmann::json series_to_json(const PowerSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int n = 0; n <= s.order(); ++n) coeffs.push_back(poly_to_json(s.coeff(n)));
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

PowerSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") ||
      !j["coeffs"].is_array() || !j["order"].is_number_integer())
    throw std::invalid_argument("series JSON must be {\"order\": K, \"coeffs\": [...]}");
  int order = j["order"].get<int>();
  if (order < 0 || j["coeffs"].size() != static_cast<size_t>(order) + 1)
    throw std::invalid_argument("series JSON needs order+1 coefficients");
  PowerSeries s(order);
  for (int n = 0; n <= order; ++n) s.set_coeff(n, poly_from_json(j["coeffs"][n]));
  return s;
}

}  // namespace gramtree::algebra
