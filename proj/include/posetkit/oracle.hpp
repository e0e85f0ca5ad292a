#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "posetkit/core.hpp"
#include "posetkit/decomposition.hpp"
#include "posetkit/recognition.hpp"

// Brute-force reference implementations. Nothing here calls into the
// duality, decomposition, witness or recognition algorithms.
namespace posetkit::oracle {

struct EnumerationOptions {
  bool allow_seven = false;
};

// Labels used by the enumerators: "a", "b", ...
std::vector<ElementId> canonical_labels(std::size_t n);

// Visits every labeled strict partial order on n elements exactly once, in a
// fixed order, by backtracking over the unordered pairs. Throws
// BudgetExceededError for n > 6 (n > 7 with allow_seven).
void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit,
                    EnumerationOptions options = {});
std::vector<Poset> enumerate_posets(std::size_t n, EnumerationOptions options = {});

// Second, independent enumeration: filters all 2^(n(n-1)) relations on
// ordered pairs. Throws BudgetExceededError for n > 5.
std::vector<Poset> enumerate_posets_by_filtering(std::size_t n);

// Largest antichain, canonically least among the largest. Throws
// BudgetExceededError for more than 20 elements.
Antichain bruteforce_max_antichain(const Poset& p);

// Exhaustive search over chains and all set partitions. nullopt would refute
// the finite instance. Throws BudgetExceededError for more than 6 elements.
std::optional<Witness> bruteforce_witness(const Poset& p);

// Naive scan over ordered 4-tuples keeping the canonically least embedding.
// Throws BudgetExceededError for more than 10 elements.
std::optional<PatternEmbedding> bruteforce_pattern(const Poset& p, Pattern pattern);

}  // namespace posetkit::oracle
