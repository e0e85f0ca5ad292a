#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posetkit/core.hpp"

// Named posets shared by the unit suites.
namespace fixtures {

using posetkit::ElementId;
using posetkit::Poset;
using Pairs = std::vector<std::pair<ElementId, ElementId>>;

inline Poset make(std::vector<ElementId> elements, Pairs pairs) {
  return Poset::from_relations(std::move(elements), pairs);
}

// a < b < c
inline Poset chain3() { return make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

inline Poset antichain(std::size_t n) {
  std::vector<ElementId> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return make(labels, {});
}

// a < c, b < c, b < d
inline Poset p_n() { return make({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}}); }

// The Boolean lattice on two atoms.
inline Poset p_2x2() {
  return make({"bot", "m1", "m2", "top"},
              {{"bot", "m1"}, {"bot", "m2"}, {"m1", "top"}, {"m2", "top"}});
}

// x < y < z with w incomparable to all three.
inline Poset p_3p1() { return make({"x", "y", "z", "w"}, {{"x", "y"}, {"y", "z"}}); }

// {a, b} entirely below {c, d}.
inline Poset p_sum() {
  return make({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

// a < b and c < d, nothing else.
inline Poset two_chains() { return make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}); }

// Unordered incomparable label pairs, computed straight from compare().
inline std::set<std::pair<ElementId, ElementId>> inc_pairs(const Poset& p) {
  std::set<std::pair<ElementId, ElementId>> out;
  for (const auto& x : p.elements()) {
    for (const auto& y : p.elements()) {
      if (x < y && p.compare(x, y) == posetkit::Relation::kIncomparable) out.emplace(x, y);
    }
  }
  return out;
}

// All subsets of p's elements as label vectors (small p only).
inline std::vector<std::vector<ElementId>> subsets(const Poset& p) {
  std::vector<std::vector<ElementId>> out;
  const std::size_t n = p.size();
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    std::vector<ElementId> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1) sub.push_back(p.label(i));
    }
    out.push_back(std::move(sub));
  }
  return out;
}

inline std::vector<ElementId> sorted(std::vector<ElementId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace fixtures
