#include "posetkit/verify.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "posetkit/decomposition.hpp"
#include "posetkit/io.hpp"
#include "posetkit/oracle.hpp"
#include "posetkit/recognition.hpp"
#include "posetkit/witness.hpp"

namespace posetkit {

namespace {

// Appends a failure per broken check on one poset.
void check_one(const Poset& p, std::size_t k, const SearchBudget& budget,
               std::vector<std::pair<std::string, std::string>>& out) {
  auto fail = [&](std::string check, std::string detail) {
    out.emplace_back(std::move(check), std::move(detail));
  };

  if (!p.empty()) {
    for (auto method : {WitnessMethod::kDirect, WitnessMethod::kDecomposed}) {
      auto report = validate_witness(p, ak_witness(p, method));
      if (!report.ok()) {
        fail(method == WitnessMethod::kDirect ? "ak_witness/direct" : "ak_witness/decomposed",
             report.summary());
      }
    }
  }
  if (p.size() <= 6 && !oracle::bruteforce_witness(p)) fail("bruteforce_witness", "not found");

  if (auto kw = k_witness_search(p, k, budget)) {
    auto report = validate_k_witness(p, *kw, k);
    if (!report.ok()) fail("k_witness_search", report.summary());
  } else {
    fail("k_witness_search", "no witness for k = " + std::to_string(k));
  }

  const SplitBipartite g = split_bipartite(p);
  const Matching m = max_matching(g);
  const VertexCover cover = koenig_cover(g, m);
  if (cover.size() != m.size()) fail("koenig", "cover size differs from matching size");
  for (auto [x, y] : g.edges) {
    bool hit = std::count(cover.left.begin(), cover.left.end(), x) ||
               std::count(cover.right.begin(), cover.right.end(), y);
    if (!hit) fail("koenig", "edge " + p.label(x) + "-" + p.label(y) + "+ uncovered");
  }
  for (auto [x, y] : m.edges) {
    int ends = static_cast<int>(std::count(cover.left.begin(), cover.left.end(), x)) +
               static_cast<int>(std::count(cover.right.begin(), cover.right.end(), y));
    if (ends != 1) fail("koenig", "matching edge without exactly one covered endpoint");
  }

  if (!p.empty()) {
    const auto d = dilworth(p);
    const auto brute = oracle::bruteforce_max_antichain(p);
    if (d.chains.size() != d.antichain.size() || d.antichain.size() != brute.size()) {
      fail("dilworth", std::to_string(d.chains.size()) + " chains, antichain " +
                           std::to_string(d.antichain.size()) + ", brute force " +
                           std::to_string(brute.size()));
    }

    const auto levels = mirsky_levels(p);
    const auto chain = maximum_chain(p);
    if (levels.parts.size() != height(p) + 1 || chain.size() != levels.parts.size()) {
      fail("mirsky", "level count, height and maximum chain disagree");
    } else {
      for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& part = levels.parts[i];
        if (std::find(part.begin(), part.end(), chain[i]) == part.end()) {
          fail("mirsky", "maximum chain skips level " + std::to_string(i));
        }
      }
    }
  }

  const auto comps = inc_components(p);
  std::vector<Poset> parts;
  for (const auto& c : comps.components) parts.push_back(induced(p, c));
  if (!(linear_sum(parts) == p)) fail("decomposition", "linear sum does not reconstruct input");

  for (auto pattern : {Pattern::kThreePlusOne, Pattern::kTwoPlusTwo}) {
    if (find_pattern(p, pattern) != oracle::bruteforce_pattern(p, pattern)) {
      fail("find_pattern", std::string("disagrees with brute force on ") + to_string(pattern));
    }
  }
}

}  // namespace

VerifySummary verify_exhaustive(std::size_t n, std::size_t k, std::size_t threads,
                                const SearchBudget& budget) {
  VerifySummary summary;
  summary.n = n;
  summary.k = k;
  const std::vector<Poset> posets = oracle::enumerate_posets(n);
  summary.checked = posets.size();

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, posets.size()));

  std::mutex mu;
  std::exception_ptr error;
  auto worker = [&](std::size_t t) {
    try {
      for (std::size_t i = t; i < posets.size(); i += threads) {
        std::vector<std::pair<std::string, std::string>> local;
        check_one(posets[i], k, budget, local);
        if (local.empty()) continue;
        std::lock_guard lock(mu);
        for (auto& [check, detail] : local) {
          summary.failures.push_back(
              {i, emit_document(to_document(posets[i])), std::move(check), std::move(detail)});
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  std::stable_sort(summary.failures.begin(), summary.failures.end(),
                   [](const auto& a, const auto& b) { return a.poset_index < b.poset_index; });
  return summary;
}

}  // namespace posetkit
