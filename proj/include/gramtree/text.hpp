#pragma once

#include <string>

#include "json.hpp"

#include "gramtree/series.hpp"

namespace gramtree::algebra {

// Canonical text: terms in canonical order joined by " + ", each term
// "<coeff>*v1^e1*..." with factors in ascending variable-name order and
// "^1" omitted.  The coefficient is always printed; a constant term is the
// bare rational; the zero polynomial is "0".
std::string to_text(const LaurentPoly& p);

// Multi-line: "order: K" then one "q^n: <poly>" line per coefficient.
std::string to_text(const PowerSeries& s);

// Inverse of to_text plus forgiving whitespace.  Term syntax:
//   term   := [coeff '*'] factor ('*' factor)*  |  coeff
//   factor := name ['^' integer]
// joined by '+'/'-'.  Throws std::invalid_argument on malformed input.
LaurentPoly parse_poly(const std::string& text);

nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);
nlohmann::json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

}  // namespace gramtree::algebra
