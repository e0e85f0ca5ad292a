#include "posetkit/core.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace posetkit {

CycleError::CycleError(std::vector<std::string> cycle)
    : InputError([&] {
        std::string msg = "relation contains a cycle:";
        for (const auto& c : cycle) msg += " " + c;
        if (!cycle.empty()) msg += " " + cycle.front();
        return msg;
      }()),
      cycle_(std::move(cycle)) {}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::kLess: return "LT";
    case Relation::kGreater: return "GT";
    case Relation::kEqual: return "EQ";
    case Relation::kIncomparable: return "INC";
  }
  return "?";
}

namespace {

// Finds a cycle through `start` in the raw successor lists, for reporting.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& succ,
                                    std::size_t start) {
  std::vector<std::size_t> parent(succ.size(), succ.size());
  std::vector<std::size_t> queue{start};
  std::vector<bool> seen(succ.size(), false);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t v = queue[head];
    for (std::size_t w : succ[v]) {
      if (w == start) {
        std::vector<std::size_t> cycle;
        for (std::size_t u = v; u != start; u = parent[u]) cycle.push_back(u);
        cycle.push_back(start);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return {start};
}

}  // namespace

void Poset::index_labels() {
  index_.clear();
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) throw DuplicateLabelError(labels_[i]);
  }
  canonical_.resize(labels_.size());
  std::iota(canonical_.begin(), canonical_.end(), 0);
  std::sort(canonical_.begin(), canonical_.end(),
            [&](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
  rank_.assign(labels_.size(), 0);
  for (std::size_t r = 0; r < canonical_.size(); ++r) rank_[canonical_[r]] = r;
}

Poset Poset::from_index_pairs(std::vector<ElementId> elements,
                              std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const std::size_t n = elements.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw InputError("relation endpoint out of range");
    if (x == y) throw CycleError({elements[x]});
    succ[x].push_back(y);
  }

  // Closure by DFS from every vertex; a vertex reaching itself is on a cycle.
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack(succ[s].begin(), succ[s].end());
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      if (up[s].test(v)) continue;
      up[s].set(v);
      for (std::size_t w : succ[v]) stack.push_back(w);
    }
    if (up[s].test(s)) {
      std::vector<ElementId> cycle;
      for (std::size_t i : find_cycle(succ, s)) cycle.push_back(elements[i]);
      throw CycleError(std::move(cycle));
    }
  }
  return from_closed_order(std::move(elements), std::move(up));
}

Poset Poset::from_relations(std::vector<ElementId> elements,
                            std::span<const std::pair<ElementId, ElementId>> pairs) {
  std::unordered_map<std::string_view, std::size_t> idx;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!idx.emplace(elements[i], i).second) throw DuplicateLabelError(elements[i]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> ipairs;
  ipairs.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    auto ix = idx.find(x);
    if (ix == idx.end()) throw UnknownElementError(x);
    auto iy = idx.find(y);
    if (iy == idx.end()) throw UnknownElementError(y);
    ipairs.emplace_back(ix->second, iy->second);
  }
  return from_index_pairs(std::move(elements), ipairs);
}

Poset Poset::from_closed_order(std::vector<ElementId> elements, std::vector<Bitset> up) {
  Poset p;
  const std::size_t n = elements.size();
  p.labels_ = std::move(elements);
  p.up_ = std::move(up);
  p.down_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = p.up_[i].find_first(); j != Bitset::npos; j = p.up_[i].find_next(j)) {
      p.down_[j].set(i);
    }
  }
  p.index_labels();
  return p;
}

std::optional<std::size_t> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Poset::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw UnknownElementError(std::string(label));
  return it->second;
}

Relation Poset::compare(std::size_t i, std::size_t j) const {
  if (i == j) return Relation::kEqual;
  if (up_[i].test(j)) return Relation::kLess;
  if (down_[i].test(j)) return Relation::kGreater;
  return Relation::kIncomparable;
}

Relation Poset::compare(std::string_view x, std::string_view y) const {
  return compare(index_of(x), index_of(y));
}

Bitset Poset::incomparable_to(std::size_t i) const {
  Bitset inc = up_[i] | down_[i];
  inc.set(i);
  inc.flip();
  return inc;
}

std::size_t Poset::relation_size() const {
  std::size_t total = 0;
  for (const auto& row : up_) total += row.count();
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::relation_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(relation_size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (auto j = up_[i].find_first(); j != Bitset::npos; j = up_[i].find_next(j)) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::size_t> Poset::linear_extension() const {
  // x < y implies |down(x)| < |down(y)|; ties broken canonically.
  std::vector<std::size_t> order = canonical_;
  std::vector<std::size_t> depth(size());
  for (std::size_t i = 0; i < size(); ++i) depth[i] = down_[i].count();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });
  return order;
}

std::vector<std::size_t> Poset::indices_of(std::span<const ElementId> labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index_of(l));
  return out;
}

std::vector<ElementId> Poset::labels_of(const Bitset& set) const {
  std::vector<ElementId> out;
  for (std::size_t i : canonical_) {
    if (set.test(i)) out.push_back(labels_[i]);
  }
  return out;
}

bool operator==(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> map(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.find(a.labels_[i]);
    if (!j) return false;
    map[i] = *j;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.up_[i].count() != b.up_[map[i]].count()) return false;
    for (auto j = a.up_[i].find_first(); j != Bitset::npos; j = a.up_[i].find_next(j)) {
      if (!b.less(map[i], map[j])) return false;
    }
  }
  return true;
}

std::vector<ElementId> sorted_labels(std::vector<ElementId> labels) {
  std::sort(labels.begin(), labels.end());
  return labels;
}

Relation compare(const Poset& p, std::string_view x, std::string_view y) {
  return p.compare(x, y);
}

std::vector<ElementId> down_set(const Poset& p, std::span<const ElementId> xs) {
  Bitset acc(p.size());
  for (std::size_t i : p.indices_of(xs)) {
    acc |= p.below(i);
    acc.set(i);
  }
  return p.labels_of(acc);
}

std::vector<ElementId> up_set(const Poset& p, std::span<const ElementId> xs) {
  Bitset acc(p.size());
  for (std::size_t i : p.indices_of(xs)) {
    acc |= p.above(i);
    acc.set(i);
  }
  return p.labels_of(acc);
}

Poset dual(const Poset& p) {
  std::vector<Bitset> up;
  up.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) up.push_back(p.below(i));
  return Poset::from_closed_order(p.elements(), std::move(up));
}

Poset induced(const Poset& p, const Bitset& subset) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (subset.test(i)) keep.push_back(i);
  }
  std::vector<ElementId> labels;
  std::vector<Bitset> up(keep.size(), Bitset(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(p.label(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (p.less(keep[a], keep[b])) up[a].set(b);
    }
  }
  return Poset::from_closed_order(std::move(labels), std::move(up));
}

Poset induced(const Poset& p, std::span<const ElementId> subset) {
  Bitset mask(p.size());
  for (std::size_t i : p.indices_of(subset)) mask.set(i);
  return induced(p, mask);
}

std::vector<std::pair<ElementId, ElementId>> hasse(const Poset& p) {
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (std::size_t x : p.canonical_order()) {
    for (std::size_t y : p.canonical_order()) {
      if (!p.less(x, y)) continue;
      // Nothing strictly between x and y.
      if (!p.above(x).intersects(p.below(y))) covers.emplace_back(p.label(x), p.label(y));
    }
  }
  return covers;
}

std::vector<std::size_t> element_heights(const Poset& p) {
  std::vector<std::size_t> h(p.size(), 0);
  for (std::size_t y : p.linear_extension()) {
    const Bitset& below = p.below(y);
    for (auto x = below.find_first(); x != Bitset::npos; x = below.find_next(x)) {
      h[y] = std::max(h[y], h[x] + 1);
    }
  }
  return h;
}

std::size_t element_height(const Poset& p, std::string_view x) {
  std::size_t i = p.index_of(x);
  return element_heights(p)[i];
}

std::size_t height(const Poset& p) {
  if (p.empty()) throw EmptyPosetError();
  auto h = element_heights(p);
  return *std::max_element(h.begin(), h.end());
}

bool is_chain(const Poset& p, std::span<const std::size_t> members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!p.less(members[a], members[b])) return false;
    }
  }
  return true;
}

bool is_antichain(const Poset& p, std::span<const std::size_t> members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (p.comparable(members[a], members[b])) return false;
    }
  }
  return true;
}

}  // namespace posetkit
