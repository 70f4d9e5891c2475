#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramtree/series.hpp"

namespace gramtree::catalog {

// A closed-form series disagreed with its required low-order shape.
struct ConventionViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The eight polynomial families with closed-form generating functions.
enum class FamilyId { narayana, g2, g4, g6, m2, m5, gtilde, m5t };

FamilyId family_from_name(const std::string& name);  // std::invalid_argument
std::string family_name(FamilyId fam);
const std::vector<std::string>& family_names();

algebra::Int catalan(unsigned n);
algebra::Int motzkin(unsigned n);
algebra::Int sequence(const std::string& name, unsigned n);  // "catalan"|"motzkin"
algebra::Int narayana_number(unsigned n, unsigned k);

// Sum over k of narayana_number(n, k) x^k.
algebra::LaurentPoly narayana_poly(unsigned n);

// Bivariate Motzkin polynomial: sum over k of C(n,2k) Cat(k) u^(k+1) v^(n-2k).
algebra::LaurentPoly motzkin_poly(unsigned n);

// Count of n-edge plane trees with i old leaves and j young leaves.
algebra::Int p_explicit(unsigned n, unsigned i, unsigned j);

// Truncated expansion of the family's closed-form generating function
// (P - sqrt(R)) / (2 q^m); coefficient n is the n-th family polynomial.
algebra::PowerSeries gf_series(FamilyId fam, int order);

// The family's fixed low-index values (n = 0 and n = 1).
algebra::LaurentPoly convention_value(FamilyId fam, int n);

// Tree realization of the family: statistic-to-variable weights, whether the
// sum runs over tip-augmented trees, and the edge count carrying index n.
const std::map<std::string, std::string>& family_stat_spec(FamilyId fam);
bool family_tip_augmented(FamilyId fam);
int family_edges_for_index(FamilyId fam, int n);

// Gamma expansion of a palindromic univariate polynomial
// p = x^shift * sum_k gamma_k x^k (1+x)^(m-2k).  Throws NotSymmetric when the
// coefficient vector is not palindromic.
struct GammaVector {
  int shift = 0;
  std::vector<algebra::Rat> gammas;
};
GammaVector gamma_vector(const algebra::LaurentPoly& p);

// Exact real-rootedness report via Sturm chains on the squarefree part.
// positive_roots counts distinct roots in (0, +inf).  Throws ZeroPolynomial
// on the zero polynomial; x^k factors are stripped first.
struct RootReport {
  bool all_real = false;
  int positive_roots = 0;
  int distinct_real_roots = 0;
  int squarefree_degree = 0;
};
RootReport root_report(const algebra::LaurentPoly& p);

}  // namespace gramtree::catalog
