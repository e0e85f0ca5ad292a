#include "posetkit/duality.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

namespace posetkit {

SearchBudget SearchBudget::from_environment() {
  SearchBudget b;
  if (const char* env = std::getenv("POSETKIT_BUDGET_MS")) {
    char* end = nullptr;
    long long ms = std::strtoll(env, &end, 10);
    if (end != env && ms > 0) b.time_limit = std::chrono::milliseconds(ms);
  }
  return b;
}

AntichainPartition mirsky_levels(const Poset& p) {
  if (p.empty()) throw EmptyPosetError();
  auto h = element_heights(p);
  std::size_t levels = *std::max_element(h.begin(), h.end()) + 1;
  AntichainPartition out;
  out.parts.resize(levels);
  for (std::size_t i : p.canonical_order()) out.parts[h[i]].push_back(p.label(i));
  return out;
}

Chain maximum_chain(const Poset& p) {
  if (p.empty()) throw EmptyPosetError();
  auto h = element_heights(p);
  // co[x]: edge count of a longest chain starting at x.
  std::vector<std::size_t> co(p.size(), 0);
  auto order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Bitset& up = p.above(*it);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      co[*it] = std::max(co[*it], co[y] + 1);
    }
  }
  const std::size_t top = *std::max_element(h.begin(), h.end());

  // Greedy in canonical order: any element on some longest chain extends.
  Chain chain;
  std::size_t cur = p.size();
  for (std::size_t level = 0; level <= top; ++level) {
    for (std::size_t y : p.canonical_order()) {
      if (h[y] != level || co[y] != top - level) continue;
      if (cur != p.size() && !p.less(cur, y)) continue;
      cur = y;
      break;
    }
    chain.push_back(p.label(cur));
  }
  return chain;
}

SplitBipartite split_bipartite(const Poset& p) {
  SplitBipartite g;
  g.elements = p.elements();
  g.adjacency.resize(p.size());
  for (std::size_t x : p.canonical_order()) {
    for (std::size_t y : p.canonical_order()) {
      if (p.less(x, y)) {
        g.edges.emplace_back(x, y);
        g.adjacency[x].push_back(y);
      }
    }
  }
  return g;
}

namespace {

constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

std::vector<std::size_t> canonical_indices(const std::vector<ElementId>& labels) {
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  return order;
}

struct Augmenter {
  const SplitBipartite& g;
  std::vector<std::size_t> mate_left;
  std::vector<std::size_t> mate_right;
  std::vector<std::size_t> visited;
  std::size_t stamp = 0;

  explicit Augmenter(const SplitBipartite& graph)
      : g(graph),
        mate_left(graph.elements.size(), kUnmatched),
        mate_right(graph.elements.size(), kUnmatched),
        visited(graph.elements.size(), 0) {}

  bool augment(std::size_t u) {
    for (std::size_t v : g.adjacency[u]) {
      if (visited[v] == stamp) continue;
      visited[v] = stamp;
      if (mate_right[v] == kUnmatched || augment(mate_right[v])) {
        mate_left[u] = v;
        mate_right[v] = u;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

Matching max_matching(const SplitBipartite& g) {
  Augmenter aug(g);
  const auto order = canonical_indices(g.elements);
  for (std::size_t u : order) {
    ++aug.stamp;
    aug.augment(u);
  }
  Matching m;
  for (std::size_t u : order) {
    if (aug.mate_left[u] != kUnmatched) m.edges.emplace_back(u, aug.mate_left[u]);
  }
  return m;
}

VertexCover koenig_cover(const SplitBipartite& g, const Matching& m) {
  const std::size_t n = g.elements.size();
  std::vector<std::size_t> mate_left(n, kUnmatched), mate_right(n, kUnmatched);
  for (auto [u, v] : m.edges) {
    if (u >= n || v >= n ||
        std::find(g.adjacency[u].begin(), g.adjacency[u].end(), v) == g.adjacency[u].end()) {
      throw NotMaximumMatchingError("matching edge is not an edge of the graph");
    }
    if (mate_left[u] != kUnmatched || mate_right[v] != kUnmatched) {
      throw NotMaximumMatchingError("matching edges share an endpoint");
    }
    mate_left[u] = v;
    mate_right[v] = u;
  }

  // Alternating reachability: unmatched left vertices, out along non-matching
  // edges, back along matching edges.
  std::vector<bool> reach_left(n, false), reach_right(n, false);
  std::vector<std::size_t> queue;
  for (std::size_t u = 0; u < n; ++u) {
    if (mate_left[u] == kUnmatched) {
      reach_left[u] = true;
      queue.push_back(u);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t u = queue[head];
    for (std::size_t v : g.adjacency[u]) {
      if (reach_right[v] || mate_left[u] == v) continue;
      reach_right[v] = true;
      std::size_t w = mate_right[v];
      if (w == kUnmatched) {
        throw NotMaximumMatchingError("augmenting path ends at " + g.elements[v] + "+");
      }
      if (!reach_left[w]) {
        reach_left[w] = true;
        queue.push_back(w);
      }
    }
  }

  VertexCover cover;
  for (std::size_t x : canonical_indices(g.elements)) {
    if (!reach_left[x] && mate_left[x] != kUnmatched) cover.left.push_back(x);
    if (reach_right[x]) cover.right.push_back(x);
  }
  return cover;
}

DilworthDecomposition dilworth(const Poset& p) {
  if (p.empty()) throw EmptyPosetError();
  const std::size_t n = p.size();
  const SplitBipartite g = split_bipartite(p);
  const Matching m = max_matching(g);

  std::vector<std::size_t> next(n, kUnmatched);
  std::vector<bool> has_prev(n, false);
  for (auto [x, y] : m.edges) {
    next[x] = y;
    has_prev[y] = true;
  }
  DilworthDecomposition out;
  for (std::size_t head : p.canonical_order()) {
    if (has_prev[head]) continue;
    Chain chain;
    for (std::size_t x = head; x != kUnmatched; x = next[x]) chain.push_back(p.label(x));
    out.chains.push_back(std::move(chain));
  }

  // The cover is taken in the dual orientation, so alternating paths start
  // from chain heads and the certificate sits as low in p as possible.
  const SplitBipartite dg = split_bipartite(dual(p));
  Matching mirrored;
  for (auto [x, y] : m.edges) mirrored.edges.emplace_back(y, x);
  const VertexCover cover = koenig_cover(dg, mirrored);
  std::vector<bool> covered(n, false);
  for (std::size_t x : cover.left) covered[x] = true;
  for (std::size_t x : cover.right) covered[x] = true;
  for (std::size_t x : p.canonical_order()) {
    if (!covered[x]) out.antichain.push_back(p.label(x));
  }
  return out;
}

std::size_t width(const Poset& p) { return dilworth(p).antichain.size(); }

namespace {

using Mask = std::uint32_t;

class KWitnessSearch {
 public:
  KWitnessSearch(const Poset& p, std::size_t k, const SearchBudget& budget)
      : p_(p), k_(k), n_(p.size()), budget_(budget),
        deadline_(std::chrono::steady_clock::now() + budget.time_limit) {
    // Bit r of every mask is the element of canonical rank r.
    comparable_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (a != b && p.comparable(p.canonical_order()[a], p.canonical_order()[b])) {
          comparable_[a] |= Mask{1} << b;
        }
      }
    }
    collect_chains();
  }

  std::optional<KWitness> run() {
    // Pairwise disjoint chain tuples first, then the overlapping ones.
    for (bool disjoint : {true, false}) {
      for (std::size_t t = 1; t <= k_; ++t) {
        std::vector<std::size_t> pick;
        if (try_tuples(t, 0, pick, disjoint)) return result_;
      }
    }
    return std::nullopt;
  }

 private:
  void collect_chains() {
    for (Mask s = 1; s < (Mask{1} << n_); ++s) {
      bool ok = true;
      for (std::size_t a = 0; a < n_ && ok; ++a) {
        if (!(s >> a & 1)) continue;
        Mask others = s & ~(Mask{1} << a);
        if ((comparable_[a] & others) != others) ok = false;
      }
      if (ok) chains_.push_back(s);
    }
    // Longest first, then lexicographically by canonical member sequence.
    std::sort(chains_.begin(), chains_.end(), [](Mask a, Mask b) {
      int ca = std::popcount(a), cb = std::popcount(b);
      if (ca != cb) return ca > cb;
      Mask diff = a ^ b;
      Mask low = diff & -diff;
      return (a & low) != 0;
    });
  }

  void tick() {
    if (ticks_++ % 4096 == 0 && std::chrono::steady_clock::now() >= deadline_) {
      throw BudgetExceededError("k-witness search exceeded its time limit");
    }
  }

  bool try_tuples(std::size_t t, std::size_t from, std::vector<std::size_t>& pick,
                  bool disjoint) {
    if (pick.size() == t) {
      Mask used = 0;
      bool pairwise = true;
      for (std::size_t c : pick) {
        if (used & chains_[c]) pairwise = false;
        used |= chains_[c];
      }
      if (pairwise != disjoint) return false;
      return try_partitions(pick);
    }
    for (std::size_t c = from; c < chains_.size(); ++c) {
      pick.push_back(c);
      if (try_tuples(t, c + 1, pick, disjoint)) return true;
      pick.pop_back();
    }
    return false;
  }

  bool part_ok(Mask part, const std::vector<std::size_t>& pick) const {
    std::size_t met = 0;
    for (std::size_t c : pick) {
      if (chains_[c] & part) ++met;
    }
    return met == std::min<std::size_t>(std::popcount(part), k_);
  }

  // Restricted-growth assignment of elements (canonical order) to parts,
  // keeping every part an antichain.
  bool assign(std::size_t e, std::vector<Mask>& parts, const std::vector<std::size_t>& pick) {
    tick();
    if (e == n_) {
      for (Mask part : parts) {
        if (!part_ok(part, pick)) return false;
      }
      record(parts, pick);
      return true;
    }
    const Mask bit = Mask{1} << e;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (comparable_[e] & parts[i]) continue;
      parts[i] |= bit;
      if (assign(e + 1, parts, pick)) return true;
      parts[i] &= ~bit;
    }
    parts.push_back(bit);
    if (assign(e + 1, parts, pick)) return true;
    parts.pop_back();
    return false;
  }

  bool try_partitions(const std::vector<std::size_t>& pick) {
    std::vector<Mask> parts;
    return assign(0, parts, pick);
  }

  std::vector<ElementId> members(Mask s) const {
    std::vector<ElementId> out;
    for (std::size_t r = 0; r < n_; ++r) {
      if (s >> r & 1) out.push_back(p_.label(p_.canonical_order()[r]));
    }
    return out;
  }

  void record(const std::vector<Mask>& parts, const std::vector<std::size_t>& pick) {
    result_ = KWitness{};
    for (std::size_t c : pick) {
      // Members of a chain in canonical order need not be bottom to top.
      std::vector<std::size_t> idx;
      for (std::size_t r = 0; r < n_; ++r) {
        if (chains_[c] >> r & 1) idx.push_back(p_.canonical_order()[r]);
      }
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return p_.less(a, b); });
      Chain chain;
      for (std::size_t i : idx) chain.push_back(p_.label(i));
      result_.chains.push_back(std::move(chain));
    }
    for (Mask part : parts) result_.partition.parts.push_back(members(part));
  }

  const Poset& p_;
  std::size_t k_;
  std::size_t n_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Mask> comparable_;
  std::vector<Mask> chains_;
  std::size_t ticks_ = 0;
  KWitness result_;
};

}  // namespace

std::optional<KWitness> k_witness_search(const Poset& p, std::size_t k,
                                         const SearchBudget& budget) {
  if (k == 0) throw BadParamsError("k must be at least 1");
  if (p.size() > budget.max_elements || p.size() > 20) {
    throw BudgetExceededError("k-witness search limited to " +
                              std::to_string(std::min<std::size_t>(budget.max_elements, 20)) +
                              " elements, got " + std::to_string(p.size()));
  }
  if (k > budget.max_k) {
    throw BudgetExceededError("k-witness search limited to k <= " + std::to_string(budget.max_k));
  }
  if (p.empty()) return KWitness{};
  return KWitnessSearch(p, k, budget).run();
}

}  // namespace posetkit
