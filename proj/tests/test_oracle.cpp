#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "posetkit/oracle.hpp"
#include "posetkit/witness.hpp"

using namespace posetkit;

namespace {

using Labels = std::vector<ElementId>;

// Strict-order pairs as labels; identifies a labeled poset.
std::set<std::pair<ElementId, ElementId>> key(const Poset& p) {
  std::set<std::pair<ElementId, ElementId>> out;
  for (auto [i, j] : p.relation_pairs()) out.emplace(p.label(i), p.label(j));
  return out;
}

}  // namespace

TEST_CASE("canonical_labels") {
  CHECK(oracle::canonical_labels(0).empty());
  CHECK(oracle::canonical_labels(3) == Labels{"a", "b", "c"});
}

TEST_CASE("both enumerators agree on every size up to 5") {
  const std::vector<std::size_t> counts{1, 1, 3, 19, 219, 4231};
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto a = oracle::enumerate_posets(n);
    const auto b = oracle::enumerate_posets_by_filtering(n);
    CHECK(a.size() == counts[n]);
    CHECK(b.size() == counts[n]);
    std::set<std::set<std::pair<ElementId, ElementId>>> ka, kb;
    for (const auto& p : a) ka.insert(key(p));
    for (const auto& p : b) kb.insert(key(p));
    CHECK(ka.size() == counts[n]);
    CHECK(ka == kb);
  }
}

TEST_CASE("six-element enumeration count") {
  std::size_t count = 0;
  oracle::for_each_poset(6, [&](const Poset&) { ++count; });
  CHECK(count == 130023);
}

TEST_CASE("oracle budgets") {
  CHECK_THROWS_AS(oracle::for_each_poset(7, [](const Poset&) {}), BudgetExceededError);
  CHECK_THROWS_AS(oracle::for_each_poset(8, [](const Poset&) {}, {true}), BudgetExceededError);
  CHECK_THROWS_AS(oracle::enumerate_posets_by_filtering(6), BudgetExceededError);
  CHECK_THROWS_AS(oracle::bruteforce_witness(fixtures::antichain(7)), BudgetExceededError);
  CHECK_THROWS_AS(oracle::bruteforce_pattern(fixtures::antichain(11), Pattern::kTwoPlusTwo),
                  BudgetExceededError);
  Labels many;
  for (int i = 0; i < 21; ++i) many.push_back("e" + std::to_string(100 + i));
  CHECK_THROWS_AS(oracle::bruteforce_max_antichain(fixtures::make(many, {})), BudgetExceededError);
}

TEST_CASE("bruteforce_max_antichain") {
  CHECK(oracle::bruteforce_max_antichain(fixtures::chain3()) == Labels{"a"});
  CHECK(oracle::bruteforce_max_antichain(fixtures::p_n()) == Labels{"a", "b"});
  CHECK(oracle::bruteforce_max_antichain(fixtures::antichain(4)) == Labels{"a", "b", "c", "d"});
}

TEST_CASE("bruteforce_witness") {
  for (const Poset& p : {fixtures::chain3(), fixtures::p_n(), fixtures::p_2x2(), fixtures::p_3p1()}) {
    const auto w = oracle::bruteforce_witness(p);
    REQUIRE(w);
    CHECK(validate_witness(p, *w).ok());
  }
}

TEST_CASE("bruteforce_pattern") {
  using Quad = std::array<ElementId, 4>;
  auto e = oracle::bruteforce_pattern(fixtures::p_3p1(), Pattern::kThreePlusOne);
  REQUIRE(e);
  CHECK(e->elements == Quad{"x", "y", "z", "w"});
  auto t = oracle::bruteforce_pattern(fixtures::two_chains(), Pattern::kTwoPlusTwo);
  REQUIRE(t);
  CHECK(t->elements == Quad{"a", "b", "c", "d"});
  CHECK_FALSE(oracle::bruteforce_pattern(fixtures::chain3(), Pattern::kThreePlusOne));
}
