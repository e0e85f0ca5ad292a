#pragma once

#include <string>
#include <vector>

#include "posetkit/core.hpp"
#include "posetkit/decomposition.hpp"
#include "posetkit/duality.hpp"

namespace posetkit {

enum class WitnessMethod {
  kDirect,      // maximum chain + Mirsky levels
  kDecomposed,  // per Inc component, then combined across the linear sum
};

enum class ViolationKind {
  kNotAChain,
  kNotAnAntichain,
  kNotAPartition,
  kPartMissesChain,
  kWrongIntersectionCount,
  kTooManyChains,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

// Every violation found; empty means valid.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string summary() const;
};

// Throws EmptyPosetError.
Witness ak_witness(const Poset& p, WitnessMethod method = WitnessMethod::kDirect);

// Throws UnknownElementError for labels outside p.
ValidationReport validate_witness(const Poset& p, const Witness& w);
ValidationReport validate_k_witness(const Poset& p, const KWitness& kw, std::size_t k);

}  // namespace posetkit
