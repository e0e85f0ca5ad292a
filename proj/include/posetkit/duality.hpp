#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "posetkit/core.hpp"

namespace posetkit {

struct AntichainPartition {
  std::vector<Antichain> parts;

  friend bool operator==(const AntichainPartition&, const AntichainPartition&) = default;
};

// Bipartite graph with a left copy x- and a right copy x+ of every element,
// and an edge (x-, y+) for each x < y. Vertices on both sides are indexed by
// the element's position in `elements`.
struct SplitBipartite {
  std::vector<ElementId> elements;
  // Edges as (left index, right index), sorted canonically.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // adjacency[x] = right neighbours of x-, in canonical order.
  std::vector<std::vector<std::size_t>> adjacency;
};

struct Matching {
  // (left index, right index) pairs into the owning SplitBipartite.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t size() const { return edges.size(); }
};

struct VertexCover {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  std::size_t size() const { return left.size() + right.size(); }
};

struct DilworthDecomposition {
  std::vector<Chain> chains;
  Antichain antichain;
};

// Up to k nonempty chains and an antichain partition; each part meets
// exactly min(|part|, k) of the chains.
struct KWitness {
  std::vector<Chain> chains;
  AntichainPartition partition;
};

// Limits for the exponential searches.
struct SearchBudget {
  std::size_t max_elements = 6;
  std::size_t max_k = 3;
  std::chrono::milliseconds time_limit{60'000};

  // Defaults, with time_limit overridden by POSETKIT_BUDGET_MS when set.
  static SearchBudget from_environment();
};

// Part i holds the elements of height i. Throws EmptyPosetError.
AntichainPartition mirsky_levels(const Poset& p);

// Lexicographically least longest chain (by canonical label order).
// Throws EmptyPosetError.
Chain maximum_chain(const Poset& p);

SplitBipartite split_bipartite(const Poset& p);

// Maximum matching by augmenting paths, scanning left vertices and their
// neighbours in canonical order.
Matching max_matching(const SplitBipartite& g);

// Koenig cover from alternating reachability out of the unmatched left
// vertices. Throws NotMaximumMatchingError if `m` is not a matching of g or
// admits an augmenting path.
VertexCover koenig_cover(const SplitBipartite& g, const Matching& m);

// Minimum chain partition plus a maximum antichain certifying it. Throws
// EmptyPosetError.
DilworthDecomposition dilworth(const Poset& p);

std::size_t width(const Poset& p);

// Exhaustive search. Returns nullopt when no witness exists (a
// counterexample); throws BudgetExceededError past the size, k or time limits.
std::optional<KWitness> k_witness_search(const Poset& p, std::size_t k,
                                         const SearchBudget& budget = {});

}  // namespace posetkit
