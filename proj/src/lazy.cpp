#include "posetkit/lazy.hpp"

#include <string>

namespace posetkit {

namespace {

Relation converse(Relation r) {
  switch (r) {
    case Relation::kLess: return Relation::kGreater;
    case Relation::kGreater: return Relation::kLess;
    default: return r;
  }
}

}  // namespace

Poset prefix(const LazyPoset& lp, std::size_t n, PrefixOptions options) {
  std::vector<ElementId> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(lp.enumerate(i));

  auto inconsistent = [&](const std::string& what, std::vector<std::size_t> idx) {
    std::vector<ElementId> names;
    for (std::size_t i : idx) names.push_back(labels[i]);
    std::string msg = "oracle inconsistency: " + what + " on";
    for (const auto& s : names) msg += " " + s;
    return OracleInconsistencyError(msg, std::move(names));
  };

  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (options.check_consistency && lp.oracle(i, i) != Relation::kEqual) {
      throw inconsistent("element not equal to itself", {i});
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const Relation r = lp.oracle(i, j);
      if (options.check_consistency) {
        if (r == Relation::kEqual) throw inconsistent("distinct elements reported equal", {i, j});
        if (lp.oracle(j, i) != converse(r)) throw inconsistent("asymmetric answers", {i, j});
      }
      if (r == Relation::kLess) up[i].set(j);
      if (r == Relation::kGreater) up[j].set(i);
    }
  }

  if (options.check_consistency) {
    for (std::size_t x = 0; x < n; ++x) {
      for (auto y = up[x].find_first(); y != Bitset::npos; y = up[x].find_next(y)) {
        if (up[y].is_subset_of(up[x])) continue;
        Bitset missing = up[y] - up[x];
        throw inconsistent("transitivity fails", {x, y, missing.find_first()});
      }
    }
  }
  return Poset::from_closed_order(std::move(labels), std::move(up));
}

SplitReport verify_omega_split(const LazyPoset& lp, const OmegaCertificate& cert, std::size_t n,
                               PrefixOptions options) {
  const Poset p = prefix(lp, n, options);
  SplitReport report;
  report.prefix_size = n;

  std::vector<std::size_t> chain;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t idx = cert.ascending(i);
    if (idx >= n) continue;
    if (!chain.empty() && !p.less(chain.back(), idx)) {
      throw CertificateViolationError("certified chain is not ascending at " + p.label(chain.back()) +
                                      ", " + p.label(idx));
    }
    if (cert.top < n && !p.less(idx, cert.top)) {
      throw CertificateViolationError(p.label(idx) + " is not below " + p.label(cert.top));
    }
    chain.push_back(idx);
  }

  Bitset lower(n);
  for (std::size_t c : chain) {
    lower |= p.below(c);
    lower.set(c);
  }
  Bitset upper = ~lower;
  for (auto f = upper.find_first(); f != Bitset::npos; f = upper.find_next(f)) {
    report.crossing_inc_edges += (lower & p.incomparable_to(f)).count();
    report.domination_violations += (lower - p.below(f)).count();
  }
  report.lower = p.labels_of(lower);
  report.upper = p.labels_of(upper);
  return report;
}

BfsLayers bfs_layers(const GraphView& g, std::string_view start) {
  auto s = g.find(start);
  if (!s) throw UnknownElementError(std::string(start));
  const std::size_t n = g.vertices.size();
  std::vector<bool> seen(n, false);
  seen[*s] = true;
  BfsLayers out;
  std::vector<std::size_t> frontier{*s};
  while (!frontier.empty()) {
    std::vector<ElementId> layer;
    std::vector<std::size_t> next;
    for (std::size_t v : frontier) {
      layer.push_back(g.vertices[v]);
      for (std::size_t w : g.adjacency[v]) {
        if (!seen[w]) {
          seen[w] = true;
          next.push_back(w);
        }
      }
    }
    out.layers.push_back(sorted_labels(std::move(layer)));
    frontier = std::move(next);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) out.unreachable.push_back(g.vertices[v]);
  }
  out.unreachable = sorted_labels(std::move(out.unreachable));
  return out;
}

Family parse_family(std::string_view name) {
  if (name == "ladder" || name == "LADDER") return Family::kLadder;
  if (name == "ladder-top" || name == "LADDER_PLUS_TOP") return Family::kLadderPlusTop;
  if (name == "omega1" || name == "OMEGA_PLUS_ONE") return Family::kOmegaPlusOne;
  if (name == "z" || name == "Z_CHAIN") return Family::kZChain;
  throw UnknownFamilyError(std::string(name));
}

const char* to_string(Family family) {
  switch (family) {
    case Family::kLadder: return "ladder";
    case Family::kLadderPlusTop: return "ladder-top";
    case Family::kOmegaPlusOne: return "omega1";
    case Family::kZChain: return "z";
  }
  return "?";
}

namespace {

Relation ladder_compare(std::size_t i, std::size_t j) {
  if (i == j) return Relation::kEqual;
  if (j >= i + 2) return Relation::kLess;
  if (i >= j + 2) return Relation::kGreater;
  return Relation::kIncomparable;
}

template <typename T>
Relation numeric_compare(T a, T b) {
  if (a == b) return Relation::kEqual;
  return a < b ? Relation::kLess : Relation::kGreater;
}

// Index 0 is the top; index k >= 1 is element k - 1 of `base`.
Relation with_top(std::size_t i, std::size_t j, Relation (*base)(std::size_t, std::size_t)) {
  if (i == 0 || j == 0) return numeric_compare(i == 0, j == 0);
  return base(i - 1, j - 1);
}

// Rung number of ladder-top index k >= 1. Order: x0, x2, then x4, x1, x6, x3,
// x8, x5, ...: each odd rung follows an even rung above it, so every prefix
// lies in the down-set of the even rungs it contains.
std::size_t ladder_top_rung(std::size_t k) {
  if (k <= 2) return 2 * (k - 1);
  const std::size_t t = k - 3;
  return t % 2 == 0 ? t + 4 : t;
}

long long z_value(std::size_t i) {
  return i % 2 == 1 ? -static_cast<long long>((i + 1) / 2) : static_cast<long long>(i / 2);
}

}  // namespace

LazyPoset builtin_family(Family family) {
  switch (family) {
    case Family::kLadder:
      return {[](std::size_t i) { return "x" + std::to_string(i); }, ladder_compare};
    case Family::kLadderPlusTop:
      return {[](std::size_t i) -> ElementId {
                return i == 0 ? "top" : "x" + std::to_string(ladder_top_rung(i));
              },
              [](std::size_t i, std::size_t j) {
                if (i == 0 || j == 0) return numeric_compare(i == 0, j == 0);
                return ladder_compare(ladder_top_rung(i), ladder_top_rung(j));
              }};
    case Family::kOmegaPlusOne:
      return {[](std::size_t i) -> ElementId { return i == 0 ? "top" : std::to_string(i - 1); },
              [](std::size_t i, std::size_t j) {
                return with_top(i, j, numeric_compare<std::size_t>);
              }};
    case Family::kZChain:
      return {[](std::size_t i) { return std::to_string(z_value(i)); },
              [](std::size_t i, std::size_t j) { return numeric_compare(z_value(i), z_value(j)); }};
  }
  throw UnknownFamilyError(std::to_string(static_cast<int>(family)));
}

std::optional<OmegaCertificate> builtin_certificate(Family family) {
  switch (family) {
    case Family::kLadderPlusTop:
      // c_i = x_{2i}.
      return OmegaCertificate{[](std::size_t i) -> std::size_t { return i < 2 ? i + 1 : 2 * i - 1; },
                              0};
    case Family::kOmegaPlusOne:
      return OmegaCertificate{[](std::size_t i) { return i + 1; }, 0};
    default:
      return std::nullopt;
  }
}

}  // namespace posetkit
