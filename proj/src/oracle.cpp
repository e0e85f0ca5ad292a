#include "posetkit/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace posetkit::oracle {

std::vector<ElementId> canonical_labels(std::size_t n) {
  std::vector<ElementId> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return labels;
}

namespace {

enum class PairState : std::uint8_t { kInc, kLess, kGreater };

class Backtracker {
 public:
  Backtracker(std::size_t n, const std::function<void(const Poset&)>& visit)
      : n_(n), visit_(visit), state_(n * n, PairState::kInc), labels_(canonical_labels(n)) {
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    }
  }

  void run() { step(0); }

 private:
  bool lt(std::size_t x, std::size_t y) const {
    if (x < y) return state_[x * n_ + y] == PairState::kLess;
    return state_[y * n_ + x] == PairState::kGreater;
  }

  // Pair (i, j) completes every triple (c, i, j) with c < i.
  bool triples_ok(std::size_t i, std::size_t j) const {
    for (std::size_t c = 0; c < i; ++c) {
      const std::size_t t[3] = {c, i, j};
      for (std::size_t x : t) {
        for (std::size_t y : t) {
          for (std::size_t z : t) {
            if (x != y && y != z && x != z && lt(x, y) && lt(y, z) && !lt(x, z)) return false;
          }
        }
      }
    }
    return true;
  }

  void step(std::size_t k) {
    if (k == pairs_.size()) {
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) {
          if (x != y && lt(x, y)) rel.emplace_back(x, y);
        }
      }
      visit_(Poset::from_index_pairs(labels_, rel));
      return;
    }
    auto [i, j] = pairs_[k];
    for (PairState s : {PairState::kInc, PairState::kLess, PairState::kGreater}) {
      state_[i * n_ + j] = s;
      if (triples_ok(i, j)) step(k + 1);
    }
    state_[i * n_ + j] = PairState::kInc;
  }

  std::size_t n_;
  const std::function<void(const Poset&)>& visit_;
  std::vector<PairState> state_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<ElementId> labels_;
};

}  // namespace

void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit,
                    EnumerationOptions options) {
  const std::size_t cap = options.allow_seven ? 7 : 6;
  if (n > cap) {
    throw BudgetExceededError("poset enumeration limited to n <= " + std::to_string(cap));
  }
  Backtracker(n, visit).run();
}

std::vector<Poset> enumerate_posets(std::size_t n, EnumerationOptions options) {
  std::vector<Poset> out;
  for_each_poset(n, [&](const Poset& p) { out.push_back(p); }, options);
  return out;
}

std::vector<Poset> enumerate_posets_by_filtering(std::size_t n) {
  if (n > 5) throw BudgetExceededError("filtering enumeration limited to n <= 5");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) slots.emplace_back(x, y);
    }
  }
  std::vector<Poset> out;
  const auto labels = canonical_labels(n);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::uint32_t> succ(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::fill(succ.begin(), succ.end(), 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (code >> s & 1) succ[slots[s].first] |= std::uint32_t{1} << slots[s].second;
    }
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (!(succ[x] >> y & 1)) continue;
        if (succ[y] >> x & 1) ok = false;                // antisymmetry
        if ((succ[y] & ~succ[x]) != 0) ok = false;       // transitivity
      }
    }
    if (!ok) continue;
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (code >> s & 1) rel.push_back(slots[s]);
    }
    out.push_back(Poset::from_index_pairs(labels, rel));
  }
  return out;
}

Antichain bruteforce_max_antichain(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 20) throw BudgetExceededError("brute-force antichain limited to 20 elements");
  std::vector<ElementId> best;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = a + 1; b < n && ok; ++b) {
        if ((s >> a & 1) && (s >> b & 1) && p.compare(a, b) != Relation::kIncomparable) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<ElementId> members;
    for (std::size_t a = 0; a < n; ++a) {
      if (s >> a & 1) members.push_back(p.label(a));
    }
    std::sort(members.begin(), members.end());
    if (members.size() > best.size() || (members.size() == best.size() && members < best)) {
      best = std::move(members);
    }
  }
  return best;
}

namespace {

// All set partitions of {0..n-1} as block-label vectors.
void all_partitions(std::size_t n, std::vector<std::size_t>& labels, std::size_t blocks,
                    std::vector<std::vector<std::size_t>>& out) {
  if (labels.size() == n) {
    out.push_back(labels);
    return;
  }
  for (std::size_t b = 0; b <= blocks; ++b) {
    labels.push_back(b);
    all_partitions(n, labels, std::max(blocks, b + 1), out);
    labels.pop_back();
  }
}

}  // namespace

std::optional<Witness> bruteforce_witness(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 6) throw BudgetExceededError("brute-force witness limited to 6 elements");

  std::vector<std::vector<std::size_t>> chains;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < n; ++a) {
      if (s >> a & 1) members.push_back(a);
    }
    bool ok = true;
    for (std::size_t a : members) {
      for (std::size_t b : members) {
        if (a != b && p.compare(a, b) == Relation::kIncomparable) ok = false;
      }
    }
    if (!ok) continue;
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return p.compare(a, b) == Relation::kLess; });
    chains.push_back(std::move(members));
  }
  std::stable_sort(chains.begin(), chains.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  std::vector<std::vector<std::size_t>> partitions;
  std::vector<std::size_t> scratch;
  all_partitions(n, scratch, 0, partitions);

  for (const auto& chain : chains) {
    std::vector<bool> on_chain(n, false);
    for (std::size_t a : chain) on_chain[a] = true;
    for (const auto& labels : partitions) {
      const std::size_t blocks = n == 0 ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = a + 1; b < n && ok; ++b) {
          if (labels[a] == labels[b] && p.compare(a, b) != Relation::kIncomparable) ok = false;
        }
      }
      std::vector<bool> hit(blocks, false);
      for (std::size_t a = 0; a < n; ++a) {
        if (on_chain[a]) hit[labels[a]] = true;
      }
      for (std::size_t b = 0; b < blocks && ok; ++b) ok = hit[b];
      if (!ok) continue;

      Witness w;
      for (std::size_t a : chain) w.chain.push_back(p.label(a));
      w.partition.parts.resize(blocks);
      for (std::size_t a = 0; a < n; ++a) w.partition.parts[labels[a]].push_back(p.label(a));
      for (auto& part : w.partition.parts) std::sort(part.begin(), part.end());
      return w;
    }
  }
  return std::nullopt;
}

std::optional<PatternEmbedding> bruteforce_pattern(const Poset& p, Pattern pattern) {
  const std::size_t n = p.size();
  if (n > 10) throw BudgetExceededError("brute-force pattern scan limited to 10 elements");
  auto lt = [&](std::size_t a, std::size_t b) { return p.compare(a, b) == Relation::kLess; };
  auto inc = [&](std::size_t a, std::size_t b) {
    return p.compare(a, b) == Relation::kIncomparable;
  };

  std::optional<std::array<ElementId, 4>> best;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t w = 0; w < n; ++w) {
          if (x == y || x == z || x == w || y == z || y == w || z == w) continue;
          bool match = pattern == Pattern::kThreePlusOne
                           ? lt(x, y) && lt(y, z) && inc(w, x) && inc(w, y) && inc(w, z)
                           : lt(x, y) && lt(z, w) && inc(x, z) && inc(x, w) && inc(y, z) &&
                                 inc(y, w);
          if (!match) continue;
          std::array<ElementId, 4> tuple{p.label(x), p.label(y), p.label(z), p.label(w)};
          if (!best || tuple < *best) best = tuple;
        }
      }
    }
  }
  if (!best) return std::nullopt;
  return PatternEmbedding{pattern, *best};
}

}  // namespace posetkit::oracle
