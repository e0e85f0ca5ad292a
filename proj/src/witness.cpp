#include "posetkit/witness.hpp"

#include <algorithm>

namespace posetkit {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNotAChain: return "not-a-chain";
    case ViolationKind::kNotAnAntichain: return "not-an-antichain";
    case ViolationKind::kNotAPartition: return "not-a-partition";
    case ViolationKind::kPartMissesChain: return "part-misses-chain";
    case ViolationKind::kWrongIntersectionCount: return "wrong-intersection-count";
    case ViolationKind::kTooManyChains: return "too-many-chains";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += to_string(v.kind);
    out += ": ";
    out += v.detail;
  }
  return out;
}

Witness ak_witness(const Poset& p, WitnessMethod method) {
  if (p.empty()) throw EmptyPosetError();
  if (method == WitnessMethod::kDirect) return Witness{maximum_chain(p), mirsky_levels(p)};

  std::vector<std::pair<Poset, Witness>> parts;
  for (const auto& comp : inc_components(p).components) {
    Poset sub = induced(p, comp);
    Witness w = ak_witness(sub, WitnessMethod::kDirect);
    parts.emplace_back(std::move(sub), std::move(w));
  }
  return combine_witnesses(parts);
}

namespace {

std::string join(const std::vector<ElementId>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i];
  }
  return out + "}";
}

void check_chain(const Poset& p, const Chain& chain, ValidationReport& report) {
  auto idx = p.indices_of(chain);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (!p.less(idx[i - 1], idx[i])) {
      report.violations.push_back({ViolationKind::kNotAChain,
                                   "chain " + join(chain) + ": " + chain[i - 1] +
                                       " is not below " + chain[i]});
      return;
    }
  }
}

// Antichain and partition checks shared by both validators.
void check_partition(const Poset& p, const AntichainPartition& partition,
                     ValidationReport& report) {
  std::vector<std::size_t> hits(p.size(), 0);
  for (const auto& part : partition.parts) {
    auto idx = p.indices_of(part);
    if (idx.empty()) {
      report.violations.push_back({ViolationKind::kNotAPartition, "empty part"});
    }
    for (std::size_t i : idx) ++hits[i];
    bool antichain = true;
    for (std::size_t a = 0; a < idx.size() && antichain; ++a) {
      for (std::size_t b = a + 1; b < idx.size() && antichain; ++b) {
        if (idx[a] != idx[b] && p.comparable(idx[a], idx[b])) antichain = false;
      }
    }
    if (!antichain) {
      report.violations.push_back({ViolationKind::kNotAnAntichain, "part " + join(part)});
    }
  }
  for (std::size_t i : p.canonical_order()) {
    if (hits[i] == 0) {
      report.violations.push_back({ViolationKind::kNotAPartition, p.label(i) + " is in no part"});
    } else if (hits[i] > 1) {
      report.violations.push_back(
          {ViolationKind::kNotAPartition, p.label(i) + " is in " + std::to_string(hits[i]) + " parts"});
    }
  }
}

}  // namespace

ValidationReport validate_witness(const Poset& p, const Witness& w) {
  ValidationReport report;
  check_chain(p, w.chain, report);
  check_partition(p, w.partition, report);
  auto chain_idx = p.indices_of(w.chain);
  for (const auto& part : w.partition.parts) {
    auto idx = p.indices_of(part);
    std::size_t met = 0;
    for (std::size_t i : idx) met += std::count(chain_idx.begin(), chain_idx.end(), i);
    if (met == 0) {
      report.violations.push_back({ViolationKind::kPartMissesChain, "part " + join(part)});
    } else if (met > 1) {
      report.violations.push_back({ViolationKind::kWrongIntersectionCount,
                                   "part " + join(part) + " meets the chain " +
                                       std::to_string(met) + " times"});
    }
  }
  return report;
}

ValidationReport validate_k_witness(const Poset& p, const KWitness& kw, std::size_t k) {
  ValidationReport report;
  if (kw.chains.size() > k) {
    report.violations.push_back({ViolationKind::kTooManyChains,
                                 std::to_string(kw.chains.size()) + " chains for k = " +
                                     std::to_string(k)});
  }
  std::vector<std::vector<std::size_t>> chain_idx;
  for (const auto& c : kw.chains) {
    check_chain(p, c, report);
    chain_idx.push_back(p.indices_of(c));
  }
  check_partition(p, kw.partition, report);
  for (const auto& part : kw.partition.parts) {
    auto idx = p.indices_of(part);
    std::size_t met = 0;
    for (const auto& c : chain_idx) {
      std::size_t common = 0;
      for (std::size_t i : idx) common += std::count(c.begin(), c.end(), i);
      if (common > 1) {
        report.violations.push_back({ViolationKind::kWrongIntersectionCount,
                                     "part " + join(part) + " meets a chain in " +
                                         std::to_string(common) + " elements"});
      }
      if (common > 0) ++met;
    }
    const std::size_t want = std::min(idx.size(), k);
    if (met != want) {
      report.violations.push_back({met == 0 ? ViolationKind::kPartMissesChain
                                            : ViolationKind::kWrongIntersectionCount,
                                   "part " + join(part) + " meets " + std::to_string(met) +
                                       " chains, expected " + std::to_string(want)});
    }
  }
  return report;
}

}  // namespace posetkit
