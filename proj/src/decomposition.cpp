#include "posetkit/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "posetkit/witness.hpp"

namespace posetkit {

std::optional<std::size_t> GraphView::find(std::string_view label) const {
  auto it = std::find(vertices.begin(), vertices.end(), label);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

GraphView graph_view(const Poset& p, GraphKind kind) {
  GraphView g;
  g.kind = kind;
  g.vertices = p.elements();
  g.adjacency.resize(p.size());
  const bool want_comparable = kind == GraphKind::kComparability;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p.comparable(i, j) == want_comparable) {
        g.edges.emplace_back(i, j);
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  return g;
}

ComponentChain inc_components(const Poset& p) {
  const std::size_t n = p.size();
  Bitset unseen(n);
  unseen.set();
  std::vector<Bitset> comps;
  for (std::size_t s : p.canonical_order()) {
    if (!unseen.test(s)) continue;
    Bitset comp(n);
    std::vector<std::size_t> stack{s};
    unseen.reset(s);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.set(v);
      Bitset next = p.incomparable_to(v) & unseen;
      for (auto w = next.find_first(); w != Bitset::npos; w = next.find_next(w)) {
        unseen.reset(w);
        stack.push_back(w);
      }
    }
    comps.push_back(std::move(comp));
  }

  // Order by one representative pair, then check domination for all pairs.
  auto below = [&](const Bitset& a, const Bitset& b) {
    return p.less(a.find_first(), b.find_first());
  };
  std::sort(comps.begin(), comps.end(), below);
  for (std::size_t a = 0; a < comps.size(); ++a) {
    Bitset later(n);
    for (std::size_t b = a + 1; b < comps.size(); ++b) later |= comps[b];
    for (auto x = comps[a].find_first(); x != Bitset::npos; x = comps[a].find_next(x)) {
      if (!later.is_subset_of(p.above(x))) {
        throw std::logic_error("incomparability components are not linearly ordered");
      }
    }
  }

  ComponentChain out;
  for (const auto& c : comps) out.components.push_back(p.labels_of(c));
  return out;
}

Poset lex_sum(const Poset& index, const std::map<ElementId, Poset>& parts) {
  std::vector<ElementId> labels;
  std::vector<std::size_t> owner;
  std::vector<std::size_t> local;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < index.size(); ++i) {
    auto it = parts.find(index.label(i));
    if (it == parts.end()) throw InputError("no summand for index element '" + index.label(i) + "'");
    const Poset& part = it->second;
    for (std::size_t j = 0; j < part.size(); ++j) {
      if (!seen.insert(part.label(j)).second) throw LabelCollisionError(part.label(j));
      labels.push_back(part.label(j));
      owner.push_back(i);
      local.push_back(j);
    }
  }

  const std::size_t n = labels.size();
  std::vector<const Poset*> part_of(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) part_of[i] = &parts.at(index.label(i));
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (owner[x] == owner[y]) {
        if (part_of[owner[x]]->less(local[x], local[y])) up[x].set(y);
      } else if (index.less(owner[x], owner[y])) {
        up[x].set(y);
      }
    }
  }
  return Poset::from_closed_order(std::move(labels), std::move(up));
}

Poset linear_sum(std::span<const Poset> parts) {
  // Index labels are positions; they never meet the summands' labels.
  std::vector<ElementId> idx;
  std::vector<std::pair<std::size_t, std::size_t>> steps;
  std::map<ElementId, Poset> by_index;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    idx.push_back(std::to_string(i));
    by_index.emplace(idx.back(), parts[i]);
    if (i > 0) steps.emplace_back(i - 1, i);
  }
  return lex_sum(Poset::from_index_pairs(std::move(idx), steps), by_index);
}

Witness combine_witnesses(std::span<const std::pair<Poset, Witness>> parts) {
  Witness out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& [poset, w] = parts[i];
    ValidationReport report;
    try {
      report = validate_witness(poset, w);
    } catch (const UnknownElementError& e) {
      throw InvalidPartWitnessError("summand " + std::to_string(i) + ": " + e.what());
    }
    if (!report.ok()) {
      throw InvalidPartWitnessError("summand " + std::to_string(i) + ": " + report.summary());
    }
    out.chain.insert(out.chain.end(), w.chain.begin(), w.chain.end());
    out.partition.parts.insert(out.partition.parts.end(), w.partition.parts.begin(),
                               w.partition.parts.end());
  }
  return out;
}

}  // namespace posetkit
