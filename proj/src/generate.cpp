#include "posetkit/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "posetkit/recognition.hpp"

namespace posetkit {

namespace {

std::vector<ElementId> numbered(const std::string& prefix, std::size_t n) {
  const std::size_t digits = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string num = std::to_string(i);
    out.push_back(prefix + std::string(digits - num.size(), '0') + num);
  }
  return out;
}

}  // namespace

Poset random_order(std::size_t n, std::size_t dims, std::uint64_t seed) {
  if (dims == 0) throw BadParamsError("random-order needs at least one linear order");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> pos(dims, std::vector<std::size_t>(n));
  for (auto& p : pos) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t r = 0; r < n; ++r) p[perm[r]] = r;
  }
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool below = std::all_of(pos.begin(), pos.end(), [&](const auto& p) { return p[x] < p[y]; });
      if (below) up[x].set(y);
    }
  }
  return Poset::from_closed_order(numbered("v", n), std::move(up));
}

Poset random_dag(std::size_t n, double prob, std::uint64_t seed) {
  if (prob < 0.0 || prob > 1.0) throw BadParamsError("probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(prob);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) pairs.emplace_back(perm[i], perm[j]);
    }
  }
  return Poset::from_index_pairs(numbered("v", n), pairs);
}

Poset unit_semiorder(std::size_t n, std::uint64_t seed, double spread) {
  if (spread < 0.0) spread = static_cast<double>(n) / 2.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, spread);
  std::vector<double> reps(n);
  for (auto& r : reps) r = dist(rng);
  return semiorder_from_unit_intervals(reps);
}

Poset grid(std::size_t rows, std::size_t cols) {
  std::vector<ElementId> labels;
  std::vector<std::pair<std::size_t, std::size_t>> steps;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      labels.push_back("r" + std::to_string(r) + "c" + std::to_string(c));
      const std::size_t at = r * cols + c;
      if (r + 1 < rows) steps.emplace_back(at, at + cols);
      if (c + 1 < cols) steps.emplace_back(at, at + 1);
    }
  }
  return Poset::from_index_pairs(std::move(labels), steps);
}

Poset random_bipartite(std::size_t lower, std::size_t upper, double prob, std::uint64_t seed) {
  if (prob < 0.0 || prob > 1.0) throw BadParamsError("probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(prob);
  std::vector<ElementId> labels = numbered("l", lower);
  for (auto& u : numbered("u", upper)) labels.push_back(u);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < lower; ++i) {
    for (std::size_t j = 0; j < upper; ++j) {
      if (coin(rng)) pairs.emplace_back(i, lower + j);
    }
  }
  return Poset::from_index_pairs(std::move(labels), pairs);
}

PosetDocument generate(const GenerateParams& params) {
  const auto& m = params.model;
  if (m == "random-order") return to_document(random_order(params.n, params.dims, params.seed));
  if (m == "unit-semiorder") return to_document(unit_semiorder(params.n, params.seed));
  if (m == "grid") return to_document(grid(params.rows, params.cols));
  if (m == "bipartite") {
    return to_document(random_bipartite(params.n / 2, params.n - params.n / 2, params.prob, params.seed));
  }
  if (m == "random-dag") return to_document(random_dag(params.n, params.prob, params.seed));
  throw BadParamsError("unknown model '" + m + "'");
}

}  // namespace posetkit
