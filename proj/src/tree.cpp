#include "gramtree/tree.hpp"

#include <algorithm>
#include <sstream>

namespace gramtree::trees {

using algebra::LaurentPoly;
using algebra::Monomial;
using algebra::Rat;

std::string encode(const PlaneTree& t) {
  std::string out;
  for (const auto& child : t.children) {
    out += '(';
    out += encode(child);
    out += ')';
  }
  return out;
}

namespace {

PlaneTree decode_at(const std::string& s, size_t& pos) {
  PlaneTree t;
  while (pos < s.size() && s[pos] == '(') {
    ++pos;
    t.children.push_back(decode_at(s, pos));
    if (pos >= s.size() || s[pos] != ')')
      throw std::invalid_argument("unbalanced encoding: '" + s + "'");
    ++pos;
  }
  return t;
}

}  // namespace

PlaneTree decode(const std::string& s) {
  size_t pos = 0;
  PlaneTree t = decode_at(s, pos);
  if (pos != s.size()) throw std::invalid_argument("trailing characters in encoding: '" + s + "'");
  return t;
}

namespace {

// walk() classifies every vertex straight from the definitions; the derived
// aggregates (oleaf, oint, interior, ...) are computed from their own
// definitions too, so the partition identities stay real checks.
struct Walker {
  TreeStats s;
  int vertices = 0;

  void walk(const PlaneTree& v, bool is_root, bool is_first_child, bool is_second_child,
            bool has_siblings) {
    ++vertices;
    bool leaf = v.children.empty() && !is_root;
    if (leaf) {
      ++s.leaf;
      if (is_first_child) {
        ++s.oleaf;
        if (has_siblings)
          ++s.eleaf;
        else
          ++s.sleaf;
      } else {
        ++s.yleaf;
        if (is_second_child)
          ++s.syleaf;
        else
          ++s.yerleaf;
      }
    }
    if (!is_root && !(leaf && is_first_child)) ++s.yedge;
    if (!v.children.empty()) {
      ++s.interior;
      const PlaneTree& first = v.children.front();
      bool first_is_leaf = first.children.empty();
      if (first_is_leaf) {
        ++s.oint;
        if (v.children.size() == 1)
          ++s.sint;
        else {
          ++s.eint;
          // The elder old leaf is a twin when the second child is a leaf too.
          if (v.children[1].children.empty())
            ++s.etleaf;
          else
            ++s.entleaf;
        }
      } else {
        ++s.yint;
      }
      for (size_t i = 0; i < v.children.size(); ++i)
        walk(v.children[i], false, i == 0, i == 1, v.children.size() > 1);
    }
  }
};

}  // namespace

TreeStats classify(const PlaneTree& t) {
  Walker w;
  w.walk(t, true, false, false, false);
  w.s.edges = w.vertices - 1;
  if (w.s.edges == 0) {
    // Convention: the lone vertex counts as interior and young interior.
    w.s.interior = 1;
    w.s.yint = 1;
  }
  return w.s;
}

const std::vector<std::string>& stat_names() {
  static const std::vector<std::string> names = {
      "edges", "leaf",   "oleaf", "yleaf",  "sleaf",  "eleaf",   "sint",   "eint",
      "oint",  "yint",   "interior", "yedge", "etleaf", "entleaf", "syleaf", "yerleaf"};
  return names;
}

int stat_value(const TreeStats& s, const std::string& name) {
  if (name == "edges") return s.edges;
  if (name == "leaf") return s.leaf;
  if (name == "oleaf") return s.oleaf;
  if (name == "yleaf") return s.yleaf;
  if (name == "sleaf") return s.sleaf;
  if (name == "eleaf") return s.eleaf;
  if (name == "sint") return s.sint;
  if (name == "eint") return s.eint;
  if (name == "oint") return s.oint;
  if (name == "yint") return s.yint;
  if (name == "interior") return s.interior;
  if (name == "yedge") return s.yedge;
  if (name == "etleaf") return s.etleaf;
  if (name == "entleaf") return s.entleaf;
  if (name == "syleaf") return s.syleaf;
  if (name == "yerleaf") return s.yerleaf;
  throw UnknownStatistic("unknown tree statistic: '" + name + "'");
}

bool is_tip_augmented(const PlaneTree& t) {
  if (t.children.empty()) return false;  // the 0-edge vertex is young interior
  const PlaneTree& first = t.children.front();
  if (!first.children.empty()) return false;
  for (size_t i = 1; i < t.children.size(); ++i)
    if (!t.children[i].children.empty() && !is_tip_augmented(t.children[i])) return false;
  return true;
}

namespace {

// Enumeration order: trees with a smaller first-child subtree come first;
// within a block the full encodings ascend lexicographically.  The block for
// first-child size k is "(" + A + ")" + B with A, B drawn from lexicographic
// lists, which already yields lexicographic order inside the block because
// the prefix length is fixed there.
class Enumerator {
 public:
  const std::vector<std::string>& spec_order(int n) {
    build(n);
    return spec_[n];
  }

 private:
  void build(int n) {
    if (n < 0) throw std::invalid_argument("negative edge count");
    while (static_cast<int>(spec_.size()) <= n) {
      int m = static_cast<int>(spec_.size());
      std::vector<std::string> list;
      if (m == 0) {
        list.push_back("");
      } else {
        for (int k = 0; k < m; ++k)
          for (const auto& a : lex_[k])
            for (const auto& b : lex_[m - 1 - k]) list.push_back("(" + a + ")" + b);
      }
      std::vector<std::string> sorted = list;
      std::sort(sorted.begin(), sorted.end());
      spec_.push_back(std::move(list));
      lex_.push_back(std::move(sorted));
    }
  }

  std::vector<std::vector<std::string>> spec_;
  std::vector<std::vector<std::string>> lex_;
};

Enumerator& enumerator() {
  static Enumerator e;
  return e;
}

}  // namespace

const std::vector<std::string>& enumerate_encodings(int n) { return enumerator().spec_order(n); }

std::vector<PlaneTree> enumerate(int n, Filter f) {
  std::vector<PlaneTree> out;
  for (const auto& enc : enumerate_encodings(n)) {
    PlaneTree t = decode(enc);
    if (f == Filter::tip_augmented && !is_tip_augmented(t)) continue;
    out.push_back(std::move(t));
  }
  return out;
}

LaurentPoly weight_sum(int n, Filter f, const std::map<std::string, std::string>& spec) {
  TreeStats probe;  // validate the statistic names before any tree work
  for (auto& [stat, var] : spec) {
    stat_value(probe, stat);
    if (!Monomial::valid_variable_name(var))
      throw std::invalid_argument("bad variable name: '" + var + "'");
  }
  LaurentPoly sum;
  for (const auto& enc : enumerate_encodings(n)) {
    PlaneTree t = decode(enc);
    if (f == Filter::tip_augmented && !is_tip_augmented(t)) continue;
    TreeStats s = classify(t);
    std::map<std::string, int> exps;
    for (auto& [stat, var] : spec) exps[var] += stat_value(s, stat);
    sum = sum + LaurentPoly::term(Rat(1), Monomial(exps));
  }
  return sum;
}

std::string stats_csv(int n, Filter f) {
  std::ostringstream out;
  out << "encoding";
  for (const auto& name : stat_names()) out << ',' << name;
  out << '\n';
  for (const auto& enc : enumerate_encodings(n)) {
    PlaneTree t = decode(enc);
    if (f == Filter::tip_augmented && !is_tip_augmented(t)) continue;
    TreeStats s = classify(t);
    out << enc;
    for (const auto& name : stat_names()) out << ',' << stat_value(s, name);
    out << '\n';
  }
  return out.str();
}

}  // namespace gramtree::trees
