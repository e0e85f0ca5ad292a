#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "posetkit/core.hpp"
#include "posetkit/decomposition.hpp"

namespace posetkit {

// A countable poset given by an enumeration of its elements and a
// comparison oracle on enumeration indices. Both callables must be pure.
struct LazyPoset {
  std::function<ElementId(std::size_t)> enumerate;
  std::function<Relation(std::size_t, std::size_t)> oracle;
};

// An omega+1 embedding: ascending(i) is the enumeration index of c_i, with
// c_0 < c_1 < ... all below the element at index `top`.
struct OmegaCertificate {
  std::function<std::size_t(std::size_t)> ascending;
  std::size_t top = 0;
};

struct SplitReport {
  std::size_t prefix_size = 0;
  std::vector<ElementId> lower;  // the down-set of the certified chain
  std::vector<ElementId> upper;  // everything else in the prefix
  std::size_t crossing_inc_edges = 0;
  std::size_t domination_violations = 0;
};

struct PrefixOptions {
  // Checks reflexivity, symmetry and transitivity of the oracle on the
  // prefix; O(n^3 / 64).
  bool check_consistency = true;
};

// The first n enumerated elements with the oracle's relation. Throws
// OracleInconsistencyError naming the offending elements.
Poset prefix(const LazyPoset& lp, std::size_t n, PrefixOptions options = {});

// Splits prefix(n) into the down-set of the certificate's chain and the
// rest, counting incomparable pairs across the split and pairs (i, f) with
// i not below f. The chain elements considered are c_0 .. c_{n-1} that fall
// inside the prefix. Throws CertificateViolationError.
SplitReport verify_omega_split(const LazyPoset& lp, const OmegaCertificate& cert, std::size_t n,
                               PrefixOptions options = {});

struct BfsLayers {
  std::vector<std::vector<ElementId>> layers;  // layer d: vertices at distance d
  std::vector<ElementId> unreachable;
};

// Throws UnknownElementError.
BfsLayers bfs_layers(const GraphView& g, std::string_view start);

enum class Family {
  kLadder,         // x_i < x_j iff j >= i + 2
  kLadderPlusTop,  // the ladder with "top" above everything, enumerated first
  kOmegaPlusOne,   // 0 < 1 < 2 < ... < top, top enumerated first
  kZChain,         // the integers, enumerated 0, -1, 1, -2, 2, ...
};

// Accepts ladder | ladder-top | omega1 | z and the upper-case names
// LADDER, LADDER_PLUS_TOP, OMEGA_PLUS_ONE, Z_CHAIN. Throws UnknownFamilyError.
Family parse_family(std::string_view name);
const char* to_string(Family family);

LazyPoset builtin_family(Family family);

// The omega+1 certificate for families that embed it.
std::optional<OmegaCertificate> builtin_certificate(Family family);

}  // namespace posetkit
