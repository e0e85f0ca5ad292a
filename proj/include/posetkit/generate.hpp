#pragma once

#include <cstdint>
#include <string>

#include "posetkit/core.hpp"
#include "posetkit/io.hpp"

namespace posetkit {

// Seeded random and structured posets. Every generator is a pure function of
// its arguments.

// Intersection of `dims` uniformly random linear orders on n elements.
Poset random_order(std::size_t n, std::size_t dims, std::uint64_t seed);

// Each pair i < j (in a hidden order) related with probability `prob`, then
// closed; labels are assigned by a random permutation.
Poset random_dag(std::size_t n, double prob, std::uint64_t seed);

// Unit-interval semiorder on n representatives drawn uniformly from
// [0, spread]; spread defaults to n / 2.
Poset unit_semiorder(std::size_t n, std::uint64_t seed, double spread = -1.0);

// Product of a rows-chain and a cols-chain.
Poset grid(std::size_t rows, std::size_t cols);

// `lower` minimal and `upper` maximal elements, each lower/upper pair
// related with probability `prob`.
Poset random_bipartite(std::size_t lower, std::size_t upper, double prob, std::uint64_t seed);

struct GenerateParams {
  std::string model = "random-order";  // random-order | unit-semiorder | grid | bipartite | random-dag
  std::size_t n = 8;
  std::size_t dims = 2;
  std::size_t rows = 2;
  std::size_t cols = 2;
  double prob = 0.5;
  std::uint64_t seed = 0;
};

// Throws BadParamsError for an unknown model or unusable parameters.
PosetDocument generate(const GenerateParams& params);

}  // namespace posetkit
