#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "posetkit/decomposition.hpp"
#include "posetkit/duality.hpp"
#include "posetkit/oracle.hpp"
#include "posetkit/witness.hpp"

using namespace posetkit;
using fixtures::sorted;

namespace {

using Labels = std::vector<ElementId>;
using LabelPairs = std::set<std::pair<ElementId, ElementId>>;

LabelPairs edge_labels(const GraphView& g) {
  LabelPairs out;
  for (auto [i, j] : g.edges) {
    auto a = g.vertices[i], b = g.vertices[j];
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

// Components of Inc(P) by union-find over compare(), independent of graph_view.
std::vector<Labels> brute_components(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = i;
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.compare(p.label(i), p.label(j)) == Relation::kIncomparable) root[find(i)] = find(j);
    }
  }
  std::map<std::size_t, Labels> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(p.label(i));
  std::vector<Labels> out;
  for (auto& [r, g] : groups) out.push_back(sorted(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("graph_view") {
  const Poset pn = fixtures::p_n();
  const auto inc = graph_view(pn, GraphKind::kIncomparability);
  CHECK(edge_labels(inc) == LabelPairs{{"a", "b"}, {"a", "d"}, {"c", "d"}});
  CHECK(edge_labels(inc) == fixtures::inc_pairs(pn));
  const auto comp = graph_view(pn, GraphKind::kComparability);
  CHECK(edge_labels(comp) == LabelPairs{{"a", "c"}, {"b", "c"}, {"b", "d"}});
  CHECK(inc.find("d").has_value());
  CHECK_FALSE(inc.find("q").has_value());
  CHECK(graph_view(fixtures::chain3(), GraphKind::kIncomparability).edges.empty());
}

TEST_CASE("inc_components") {
  using C = std::vector<Labels>;
  CHECK(inc_components(fixtures::chain3()).components == C{{"a"}, {"b"}, {"c"}});
  CHECK(inc_components(fixtures::p_sum()).components == C{{"a", "b"}, {"c", "d"}});
  CHECK(inc_components(fixtures::p_n()).components == C{{"a", "b", "c", "d"}});
  CHECK(inc_components(fixtures::p_2x2()).components == C{{"bot"}, {"m1", "m2"}, {"top"}});
  CHECK(inc_components(Poset{}).components.empty());
}

TEST_CASE("lex_sum") {
  const Poset index = fixtures::make({"i", "j"}, {{"i", "j"}});
  std::map<ElementId, Poset> parts{
      {"i", fixtures::make({"a", "b"}, {})},
      {"j", fixtures::make({"c", "d"}, {})},
  };
  CHECK(lex_sum(index, parts) == fixtures::p_sum());

  // Incomparable index elements leave their parts incomparable.
  std::map<ElementId, Poset> chains{
      {"i", fixtures::make({"a", "b"}, {{"a", "b"}})},
      {"j", fixtures::make({"c", "d"}, {{"c", "d"}})},
  };
  CHECK(lex_sum(fixtures::make({"i", "j"}, {}), chains) == fixtures::two_chains());

  std::map<ElementId, Poset> single{{"i", fixtures::chain3()}};
  CHECK(lex_sum(fixtures::make({"i"}, {}), single) == fixtures::chain3());

  std::map<ElementId, Poset> clash{{"i", fixtures::chain3()}, {"j", fixtures::chain3()}};
  CHECK_THROWS_AS(lex_sum(index, clash), LabelCollisionError);

  std::map<ElementId, Poset> missing{{"i", fixtures::chain3()}};
  CHECK_THROWS_AS(lex_sum(index, missing), InputError);
}

TEST_CASE("linear_sum") {
  std::vector<Poset> parts{fixtures::make({"a", "b"}, {}), fixtures::make({"c", "d"}, {})};
  CHECK(linear_sum(parts) == fixtures::p_sum());

  std::vector<Poset> three{fixtures::make({"bot"}, {}), fixtures::make({"m1", "m2"}, {}),
                           fixtures::make({"top"}, {})};
  CHECK(linear_sum(three) == fixtures::p_2x2());

  std::vector<Poset> clash{fixtures::chain3(), fixtures::chain3()};
  CHECK_THROWS_AS(linear_sum(clash), LabelCollisionError);
}

TEST_CASE("combine_witnesses") {
  const Poset lo = fixtures::make({"a", "b"}, {});
  const Poset hi = fixtures::make({"c", "d"}, {{"c", "d"}});
  std::vector<std::pair<Poset, Witness>> parts{
      {lo, Witness{{"a"}, AntichainPartition{{{"a", "b"}}}}},
      {hi, Witness{{"c", "d"}, AntichainPartition{{{"c"}, {"d"}}}}},
  };
  const Witness w = combine_witnesses(parts);
  CHECK(w.chain == Labels{"a", "c", "d"});
  CHECK(w.partition.parts == std::vector<Antichain>{{"a", "b"}, {"c"}, {"d"}});
  std::vector<Poset> summands{lo, hi};
  CHECK(validate_witness(linear_sum(summands), w).ok());

  std::vector<std::pair<Poset, Witness>> bad{
      {lo, Witness{{"a"}, AntichainPartition{{{"a"}, {"b"}}}}},
  };
  CHECK_THROWS_AS(combine_witnesses(bad), InvalidPartWitnessError);
}

TEST_CASE("decomposition properties over every poset with at most 5 elements") {
  for (std::size_t n = 0; n <= 5; ++n) {
    oracle::for_each_poset(n, [&](const Poset& p) {
      // Comparability and incomparability edges partition all pairs.
      const auto inc = edge_labels(graph_view(p, GraphKind::kIncomparability));
      const auto comp = edge_labels(graph_view(p, GraphKind::kComparability));
      CHECK(inc.size() + comp.size() == n * (n - (n > 0)) / 2);
      for (const auto& e : inc) CHECK(comp.count(e) == 0);
      CHECK(inc == fixtures::inc_pairs(p));

      const auto comps = inc_components(p).components;
      auto as_sets = comps;
      for (auto& c : as_sets) c = sorted(c);
      std::sort(as_sets.begin(), as_sets.end());
      CHECK(as_sets == brute_components(p));

      // Domination: each earlier component lies wholly below each later one.
      for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
          for (const auto& x : comps[i]) {
            for (const auto& y : comps[j]) CHECK(p.compare(x, y) == Relation::kLess);
          }
        }
      }

      if (n == 0) return;
      std::vector<Poset> summands;
      for (const auto& c : comps) summands.push_back(induced(p, c));
      CHECK(linear_sum(summands) == p);

      std::vector<std::pair<Poset, Witness>> parts;
      for (const auto& s : summands) parts.emplace_back(s, ak_witness(s));
      const Witness w = combine_witnesses(parts);
      CHECK(validate_witness(p, w).ok());
    });
  }
}
