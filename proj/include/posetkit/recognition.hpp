#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "posetkit/core.hpp"

namespace posetkit {

enum class Pattern {
  kThreePlusOne,  // x < y < z, w incomparable to all three
  kTwoPlusTwo,    // x < y, z < w, every cross pair incomparable
};

const char* to_string(Pattern pattern);
// Accepts "3p1" / "2p2". Throws BadParamsError.
Pattern parse_pattern(std::string_view name);

struct PatternEmbedding {
  Pattern pattern;
  // Role order (x, y, z, w) as documented on Pattern.
  std::array<ElementId, 4> elements;

  friend bool operator==(const PatternEmbedding&, const PatternEmbedding&) = default;
};

struct IncDegreeProfile {
  std::vector<std::size_t> degree;  // indexed like the poset's elements
  std::size_t max = 0;
  double mean = 0.0;
};

// Least embedding in canonical label order over the role-ordered tuple, or
// nullopt when p avoids the pattern.
std::optional<PatternEmbedding> find_pattern(const Poset& p, Pattern pattern);

// (2+2)-free and (3+1)-free.
bool is_semiorder(const Poset& p);

IncDegreeProfile inc_degree_profile(const Poset& p);

// Height of the subposet of elements incomparable to x; -1 when x is
// comparable to everything. Throws UnknownElementError.
long inc_neighborhood_height(const Poset& p, std::string_view x);

// Element i (labelled by its decimal index) is below j iff
// reps[i] + 1 < reps[j]. Differences of exactly 1 are incomparable.
Poset semiorder_from_unit_intervals(std::span<const double> reps);

}  // namespace posetkit
