#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "posetkit/duality.hpp"

namespace posetkit {

struct VerifyFailure {
  std::size_t poset_index;  // position in enumeration order
  std::string poset;        // document JSON of the failing poset
  std::string check;
  std::string detail;
};

struct VerifySummary {
  std::size_t n = 0;
  std::size_t k = 1;
  std::size_t checked = 0;
  std::vector<VerifyFailure> failures;  // sorted by poset index
};

// Runs every cross-check (both witness routes, brute-force witness, the
// k-witness search, Koenig and Dilworth against brute force, Mirsky
// interlock, decomposition round trip, pattern search against brute force)
// on every labeled poset with exactly n elements. Work is split across
// `threads` workers (0 = hardware concurrency); the result does not depend
// on the thread count.
VerifySummary verify_exhaustive(std::size_t n, std::size_t k, std::size_t threads = 0,
                                const SearchBudget& budget = {});

}  // namespace posetkit
