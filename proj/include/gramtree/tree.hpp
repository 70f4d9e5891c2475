#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramtree/poly.hpp"

namespace gramtree::trees {

struct UnknownStatistic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rooted plane tree: children are ordered left to right.
struct PlaneTree {
  std::vector<PlaneTree> children;
};

// Balanced-parentheses encoding: each child subtree renders as
// "(" + encoding of subtree + ")", children left to right.  The 0-edge tree
// encodes as "".
std::string encode(const PlaneTree& t);
PlaneTree decode(const std::string& s);  // throws std::invalid_argument

// Vertex classification.  A leaf is a childless non-root vertex; it is old
// when it is its parent's first child and young otherwise.  Old leaves split
// into singletons (no siblings) and elders; an elder is a twin when the
// parent's second child is also a leaf.  Young leaves split into second
// leaves (second children) and younger leaves.  Interior vertices (vertices
// with children) are classified by their first child: parent of a singleton,
// parent of an elder, or young interior.  A young edge is an edge whose
// child endpoint is not an old leaf.  Convention: the 0-edge tree's only
// vertex counts as interior and young interior.
struct TreeStats {
  int edges = 0;
  int leaf = 0;
  int oleaf = 0;
  int yleaf = 0;
  int sleaf = 0;
  int eleaf = 0;
  int sint = 0;
  int eint = 0;
  int oint = 0;
  int yint = 0;
  int interior = 0;
  int yedge = 0;
  int etleaf = 0;
  int entleaf = 0;
  int syleaf = 0;
  int yerleaf = 0;
};

TreeStats classify(const PlaneTree& t);
int stat_value(const TreeStats& s, const std::string& name);  // UnknownStatistic
const std::vector<std::string>& stat_names();  // fixed column order

// A tree is tip-augmented when every vertex with children has a childless
// first child.  The 0-edge tree does not qualify (its vertex is young
// interior), so the tip-augmented enumeration at 0 edges is empty.
bool is_tip_augmented(const PlaneTree& t);

enum class Filter { all, tip_augmented };

// All n-edge plane trees.  Order: the first-child subtree's edge count
// ascends; within one such block the encodings ascend lexicographically.
std::vector<PlaneTree> enumerate(int n, Filter f = Filter::all);
const std::vector<std::string>& enumerate_encodings(int n);

// Sum over the enumerated trees of prod_var var^stat, for a map from
// statistic name to variable name.  Repeated variables add exponents.
algebra::LaurentPoly weight_sum(int n, Filter f,
                                const std::map<std::string, std::string>& spec);

// CSV dump: header then one row per tree in enumeration order.
std::string stats_csv(int n, Filter f);

}  // namespace gramtree::trees
