#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gramtree/catalog.hpp"

namespace gramtree::verifier {

struct UnknownIdentity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FirstFailure {
  int n = 0;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string check_id;
  std::string range;
  bool passed = false;
  std::optional<FirstFailure> first_failure;
};

nlohmann::json report_to_json(const CheckReport& r);
std::string report_line(const CheckReport& r);

// Grammar route against the tree route: normalized n-th derivative of the
// grammar's seed equals the tree-statistic polynomial, for n up to n_max.
// Grammar names: "chen4", "motz", "soy", "rmotz".
CheckReport check_grammar(const std::string& grammar_name, int n_max);

// Closed-form route against the tree route for one family, orders 0..order.
CheckReport check_gf(catalog::FamilyId fam, int order);

// Identities: "coker", "coker_gamma", "chen_rel", "four_var", "refined_coker",
// "lin_kim", "donaghey", "euler", "motzkin_rec".
CheckReport check_identity(const std::string& id, int n_max);

// Symmetries: "narayana_sym", "six_var_sym", "old_young_sym", "tapt_sym".
CheckReport check_symmetry(const std::string& id, int n_max);

// Signed evaluations at -1: vanishing/Catalan pattern plus the central and
// alternating old-leaf coefficient facts.
CheckReport check_parity(int n_max);

// Real-rootedness and nonnegative gamma vectors for the three univariate
// families (Narayana, old-leaf, tip-augmented old-leaf).
CheckReport check_realroots(int n_max);

// Suites: "all", "grammar", "gf", "identity", "symmetry", "parity", "roots".
// max_n, when present, overrides every check's default range.
std::vector<CheckReport> run_suite(const std::string& suite, std::optional<int> max_n);

}  // namespace gramtree::verifier
