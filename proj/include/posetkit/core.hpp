#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "posetkit/errors.hpp"

namespace posetkit {

using ElementId = std::string;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

enum class Relation { kLess, kGreater, kEqual, kIncomparable };

const char* to_string(Relation r);

// Chains are listed bottom to top; antichains in canonical label order.
using Chain = std::vector<ElementId>;
using Antichain = std::vector<ElementId>;

// A finite poset stored as its strict order, transitively closed, as two
// bit matrices (strict up-sets and strict down-sets per element). Elements
// keep the order they were given in; ties in every algorithm are broken by
// the canonical order of labels (plain string comparison), exposed here as
// a rank per element.
class Poset {
 public:
  Poset() = default;

  // Closes `pairs` transitively. Throws DuplicateLabelError,
  // UnknownElementError, or CycleError with one offending cycle.
  static Poset from_relations(std::vector<ElementId> elements,
                              std::span<const std::pair<ElementId, ElementId>> pairs);

  // Same as from_relations, on element indices.
  static Poset from_index_pairs(std::vector<ElementId> elements,
                                std::span<const std::pair<std::size_t, std::size_t>> pairs);

  // Takes `up` as an already closed strict order (up[i] = strict up-set of
  // i). Only labels are checked; callers vouch for the relation.
  static Poset from_closed_order(std::vector<ElementId> elements, std::vector<Bitset> up);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<ElementId>& elements() const { return labels_; }
  const ElementId& label(std::size_t i) const { return labels_[i]; }

  std::optional<std::size_t> find(std::string_view label) const;
  // Throws UnknownElementError.
  std::size_t index_of(std::string_view label) const;

  bool less(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool comparable(std::size_t i, std::size_t j) const {
    return i == j || up_[i].test(j) || down_[i].test(j);
  }
  Relation compare(std::size_t i, std::size_t j) const;
  Relation compare(std::string_view x, std::string_view y) const;

  const Bitset& above(std::size_t i) const { return up_[i]; }
  const Bitset& below(std::size_t i) const { return down_[i]; }
  // Elements incomparable to i, i excluded.
  Bitset incomparable_to(std::size_t i) const;

  // Position of element i in the canonical label order.
  std::size_t rank(std::size_t i) const { return rank_[i]; }
  // Element indices sorted by canonical label order.
  const std::vector<std::size_t>& canonical_order() const { return canonical_; }

  // Number of strict pairs x < y.
  std::size_t relation_size() const;
  std::vector<std::pair<std::size_t, std::size_t>> relation_pairs() const;

  // Indices sorted so that x < y implies x comes first.
  std::vector<std::size_t> linear_extension() const;

  std::vector<std::size_t> indices_of(std::span<const ElementId> labels) const;
  std::vector<ElementId> labels_of(const Bitset& set) const;

  // Same label set and same relation; element order is ignored.
  friend bool operator==(const Poset& a, const Poset& b);

 private:
  void index_labels();

  std::vector<ElementId> labels_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> canonical_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Labels sorted into canonical order.
std::vector<ElementId> sorted_labels(std::vector<ElementId> labels);

Relation compare(const Poset& p, std::string_view x, std::string_view y);

// {v : v <= x for some x in xs}, in canonical label order.
std::vector<ElementId> down_set(const Poset& p, std::span<const ElementId> xs);
std::vector<ElementId> up_set(const Poset& p, std::span<const ElementId> xs);

Poset dual(const Poset& p);

// Restriction to `subset`, keeping p's element order.
Poset induced(const Poset& p, std::span<const ElementId> subset);
Poset induced(const Poset& p, const Bitset& subset);

// Covering pairs (x, y): x < y with nothing strictly between, sorted
// canonically.
std::vector<std::pair<ElementId, ElementId>> hasse(const Poset& p);

// Edge count of a longest chain ending at each element, indexed like p.
std::vector<std::size_t> element_heights(const Poset& p);
std::size_t element_height(const Poset& p, std::string_view x);
// Throws EmptyPosetError.
std::size_t height(const Poset& p);

bool is_chain(const Poset& p, std::span<const std::size_t> members);
bool is_antichain(const Poset& p, std::span<const std::size_t> members);

}  // namespace posetkit
