#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "fixtures.hpp"
#include "posetkit/core.hpp"
#include "posetkit/decomposition.hpp"
#include "posetkit/oracle.hpp"

using namespace posetkit;
using fixtures::sorted;

TEST_CASE("from_relations closes transitively") {
  Poset p = fixtures::chain3();
  CHECK(p.compare("a", "c") == Relation::kLess);
  CHECK(p.relation_size() == 3);
  CHECK(p.elements() == std::vector<ElementId>{"a", "b", "c"});
}

TEST_CASE("from_relations with no pairs is an antichain") {
  Poset p = fixtures::antichain(3);
  CHECK(p.relation_size() == 0);
  CHECK(p.compare("a", "b") == Relation::kIncomparable);
}

TEST_CASE("from_relations rejects a two-cycle") {
  try {
    fixtures::make({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL("expected CycleError");
  } catch (const CycleError& e) {
    CHECK(sorted(e.cycle()) == std::vector<ElementId>{"a", "b"});
  }
  CHECK_THROWS_AS(fixtures::make({"a"}, {{"a", "a"}}), CycleError);
  CHECK_THROWS_AS(fixtures::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
                  CycleError);
}

TEST_CASE("from_relations label errors") {
  CHECK_THROWS_AS(fixtures::make({"a", "a"}, {}), DuplicateLabelError);
  CHECK_THROWS_AS(fixtures::make({"a", "b"}, {{"a", "z"}}), UnknownElementError);
}

TEST_CASE("compare") {
  Poset c = fixtures::chain3();
  CHECK(c.compare("a", "c") == Relation::kLess);
  CHECK(c.compare("c", "a") == Relation::kGreater);
  CHECK(c.compare("b", "b") == Relation::kEqual);
  CHECK(fixtures::antichain(3).compare("a", "b") == Relation::kIncomparable);
  CHECK_THROWS_AS(c.compare("a", "q"), UnknownElementError);
}

TEST_CASE("down_set") {
  Poset pn = fixtures::p_n();
  CHECK(down_set(pn, std::vector<ElementId>{"c"}) == std::vector<ElementId>{"a", "b", "c"});
  CHECK(down_set(pn, std::vector<ElementId>{}).empty());
  CHECK(down_set(fixtures::chain3(), std::vector<ElementId>{"b"}) ==
        std::vector<ElementId>{"a", "b"});
  CHECK_THROWS_AS(down_set(pn, std::vector<ElementId>{"q"}), UnknownElementError);
}

TEST_CASE("dual") {
  Poset d = dual(fixtures::chain3());
  CHECK(d.compare("c", "b") == Relation::kLess);
  CHECK(d.compare("b", "a") == Relation::kLess);
  CHECK(dual(dual(fixtures::p_n())) == fixtures::p_n());
  // Incomparable pairs enumerated from compare() on both sides.
  Poset q = fixtures::p_2x2();
  CHECK(fixtures::inc_pairs(dual(q)) == fixtures::inc_pairs(q));
  CHECK(fixtures::inc_pairs(q) == std::set<std::pair<ElementId, ElementId>>{{"m1", "m2"}});
}

TEST_CASE("induced") {
  Poset sub = induced(fixtures::p_3p1(), std::vector<ElementId>{"x", "y", "z"});
  CHECK(sub == fixtures::make({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}));
  CHECK(induced(fixtures::p_n(), std::vector<ElementId>{}).empty());
  Poset mid = induced(fixtures::p_2x2(), std::vector<ElementId>{"m1", "m2"});
  CHECK(mid.compare("m1", "m2") == Relation::kIncomparable);
  CHECK(mid.compare("m2", "m1") == Relation::kIncomparable);
  CHECK_THROWS_AS(induced(fixtures::p_n(), std::vector<ElementId>{"q"}), UnknownElementError);
}

TEST_CASE("hasse") {
  using Covers = std::vector<std::pair<ElementId, ElementId>>;
  CHECK(hasse(fixtures::chain3()) == Covers{{"a", "b"}, {"b", "c"}});
  CHECK(hasse(fixtures::antichain(3)).empty());

  // Brute-force cover test: x < y with no z strictly between.
  Poset q = fixtures::p_2x2();
  Covers brute;
  for (const auto& x : sorted(q.elements())) {
    for (const auto& y : sorted(q.elements())) {
      if (q.compare(x, y) != Relation::kLess) continue;
      bool between = false;
      for (const auto& z : q.elements()) {
        if (q.compare(x, z) == Relation::kLess && q.compare(z, y) == Relation::kLess) between = true;
      }
      if (!between) brute.emplace_back(x, y);
    }
  }
  CHECK(brute == Covers{{"bot", "m1"}, {"bot", "m2"}, {"m1", "top"}, {"m2", "top"}});
  CHECK(hasse(q) == brute);
}

TEST_CASE("height") {
  Poset c = fixtures::chain3();
  CHECK(element_height(c, "a") == 0);
  CHECK(element_height(c, "b") == 1);
  CHECK(element_height(c, "c") == 2);
  CHECK(height(c) == 2);
  CHECK(height(fixtures::antichain(4)) == 0);
  Poset pn = fixtures::p_n();
  CHECK(element_heights(pn) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(height(pn) == 1);
  CHECK_THROWS_AS(height(Poset{}), EmptyPosetError);
}

TEST_CASE("properties over every poset with at most 5 elements") {
  for (std::size_t n = 0; n <= 5; ++n) {
    oracle::for_each_poset(n, [&](const Poset& p) {
      // Closure idempotence.
      CHECK(Poset::from_index_pairs(p.elements(), p.relation_pairs()) == p);

      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const Relation r = p.compare(i, j);
          CHECK((r == Relation::kLess) == (p.compare(j, i) == Relation::kGreater));
          CHECK((r == Relation::kEqual) == (i == j));
        }
      }

      CHECK(fixtures::inc_pairs(dual(p)) == fixtures::inc_pairs(p));
      const GraphView inc = graph_view(p, GraphKind::kIncomparability);
      const GraphView inc_dual = graph_view(dual(p), GraphKind::kIncomparability);
      CHECK(inc.edges == inc_dual.edges);

      if (n > 4) return;  // subset-pair checks below are quadratic in 2^n
      const auto subs = fixtures::subsets(p);
      for (const auto& x : subs) {
        const auto dx = down_set(p, x);
        for (const auto& e : x) CHECK(std::count(dx.begin(), dx.end(), e) == 1);
        CHECK(down_set(p, dx) == dx);
        const auto sx = sorted(x);
        for (const auto& y : subs) {
          const auto sy = sorted(y);
          if (!std::includes(sy.begin(), sy.end(), sx.begin(), sx.end())) continue;
          const auto dy = down_set(p, y);
          CHECK(std::includes(dy.begin(), dy.end(), dx.begin(), dx.end()));
        }
      }
    });
  }
}

TEST_CASE("a chain and an antichain share at most one element (n <= 5)") {
  for (std::size_t n = 0; n <= 5; ++n) {
    oracle::for_each_poset(n, [&](const Poset& p) {
      const auto order = p.linear_extension();
      std::vector<std::size_t> pos(n);
      for (std::size_t r = 0; r < n; ++r) pos[order[r]] = r;
      std::vector<std::uint32_t> chains, antichains;
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i) {
          if (s >> i & 1) members.push_back(i);
        }
        std::sort(members.begin(), members.end(),
                  [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
        if (is_chain(p, members)) chains.push_back(s);
        if (is_antichain(p, members)) antichains.push_back(s);
      }
      for (auto c : chains) {
        for (auto a : antichains) CHECK(std::popcount(c & a) <= 1);
      }
    });
  }
}
