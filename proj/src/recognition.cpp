#include "posetkit/recognition.hpp"

#include <numeric>
#include <string>

namespace posetkit {

const char* to_string(Pattern pattern) {
  return pattern == Pattern::kThreePlusOne ? "3p1" : "2p2";
}

Pattern parse_pattern(std::string_view name) {
  if (name == "3p1" || name == "3+1") return Pattern::kThreePlusOne;
  if (name == "2p2" || name == "2+2") return Pattern::kTwoPlusTwo;
  throw BadParamsError("unknown pattern '" + std::string(name) + "'");
}

namespace {

// First set bit of `set` in canonical order, or npos.
std::size_t least_in(const Poset& p, const Bitset& set) {
  for (std::size_t i : p.canonical_order()) {
    if (set.test(i)) return i;
  }
  return Bitset::npos;
}

std::optional<PatternEmbedding> find_three_plus_one(const Poset& p) {
  for (std::size_t x : p.canonical_order()) {
    for (std::size_t y : p.canonical_order()) {
      if (!p.less(x, y)) continue;
      Bitset inc_xy = p.incomparable_to(x) & p.incomparable_to(y);
      if (inc_xy.none()) continue;
      for (std::size_t z : p.canonical_order()) {
        if (!p.less(y, z)) continue;
        std::size_t w = least_in(p, inc_xy & p.incomparable_to(z));
        if (w != Bitset::npos) {
          return PatternEmbedding{Pattern::kThreePlusOne,
                                  {p.label(x), p.label(y), p.label(z), p.label(w)}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PatternEmbedding> find_two_plus_two(const Poset& p) {
  for (std::size_t x : p.canonical_order()) {
    for (std::size_t y : p.canonical_order()) {
      if (!p.less(x, y)) continue;
      Bitset inc_xy = p.incomparable_to(x) & p.incomparable_to(y);
      for (std::size_t z : p.canonical_order()) {
        if (!inc_xy.test(z)) continue;
        std::size_t w = least_in(p, inc_xy & p.above(z));
        if (w != Bitset::npos) {
          return PatternEmbedding{Pattern::kTwoPlusTwo,
                                  {p.label(x), p.label(y), p.label(z), p.label(w)}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PatternEmbedding> find_pattern(const Poset& p, Pattern pattern) {
  return pattern == Pattern::kThreePlusOne ? find_three_plus_one(p) : find_two_plus_two(p);
}

bool is_semiorder(const Poset& p) {
  return !find_two_plus_two(p) && !find_three_plus_one(p);
}

IncDegreeProfile inc_degree_profile(const Poset& p) {
  IncDegreeProfile out;
  out.degree.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.degree[i] = p.size() - 1 - p.above(i).count() - p.below(i).count();
    out.max = std::max(out.max, out.degree[i]);
  }
  if (!p.empty()) {
    out.mean = static_cast<double>(std::accumulate(out.degree.begin(), out.degree.end(),
                                                   std::size_t{0})) /
               static_cast<double>(p.size());
  }
  return out;
}

long inc_neighborhood_height(const Poset& p, std::string_view x) {
  Bitset nbhd = p.incomparable_to(p.index_of(x));
  if (nbhd.none()) return -1;
  return static_cast<long>(height(induced(p, nbhd)));
}

Poset semiorder_from_unit_intervals(std::span<const double> reps) {
  const std::size_t n = reps.size();
  std::vector<ElementId> labels;
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (reps[i] + 1.0 < reps[j]) up[i].set(j);
    }
  }
  // The threshold relation is a strict order for any finite reals.
  return Poset::from_closed_order(std::move(labels), std::move(up));
}

}  // namespace posetkit
