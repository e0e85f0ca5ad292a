#pragma once

#include <map>
#include <utility>
#include <vector>

#include "posetkit/core.hpp"
#include "posetkit/duality.hpp"

namespace posetkit {

enum class GraphKind { kComparability, kIncomparability };

// Comparability or incomparability graph of a poset. Vertex i is element i
// of the source poset; edges are (i, j) with i < j.
struct GraphView {
  GraphKind kind = GraphKind::kIncomparability;
  std::vector<ElementId> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> adjacency;

  std::optional<std::size_t> find(std::string_view label) const;
};

// Components of Inc(P) listed bottom to top; every element of an earlier
// component is below every element of a later one.
struct ComponentChain {
  std::vector<std::vector<ElementId>> components;
};

// A chain meeting every part of an antichain partition.
struct Witness {
  Chain chain;
  AntichainPartition partition;
};

GraphView graph_view(const Poset& p, GraphKind kind);

ComponentChain inc_components(const Poset& p);

// Lexicographic sum of `parts` over `index`: same-part pairs keep their
// order, cross pairs follow the index order. A single index element is
// accepted as the trivial sum. Throws LabelCollisionError, or InputError
// when an index element has no part.
Poset lex_sum(const Poset& index, const std::map<ElementId, Poset>& parts);

// Lexicographic sum over a chain, parts listed bottom to top.
Poset linear_sum(std::span<const Poset> parts);

// Joins witnesses of the summands of a linear sum (listed bottom to top):
// chains concatenate, partitions unite. Throws InvalidPartWitnessError.
Witness combine_witnesses(std::span<const std::pair<Poset, Witness>> parts);

}  // namespace posetkit
