#include "parsfm/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace parsfm {
namespace {

std::vector<Edge> random_edges(int n, int count, Rng& rng) {
  std::vector<Edge> edges;
  edges.reserve(count);
  for (int k = 0; k < count; ++k) {
    int u = static_cast<int>(rng.uniform_int(0, n - 1));
    int v = static_cast<int>(rng.uniform_int(0, n - 2));
    if (v >= u) ++v;
    edges.push_back(Edge{std::min(u, v), std::max(u, v), 1});
  }
  return edges;
}

InstancePayload propose(InstanceKind kind, int n, std::int64_t target_m, Rng& rng) {
  switch (kind) {
    case InstanceKind::kGraphCut: {
      // max cut value <= edge count, so M <= target by construction
      int m_edges = static_cast<int>(rng.uniform_int(1, target_m));
      return GraphCutPayload{random_edges(n, m_edges, rng)};
    }
    case InstanceKind::kCutMinusModular: {
      int m_edges = static_cast<int>(rng.uniform_int(1, target_m));
      CutMinusModularPayload p{random_edges(n, m_edges, rng),
                               std::vector<std::int64_t>(n, 0)};
      int charged = static_cast<int>(rng.uniform_int(0, std::min(n, 3)));
      for (int k = 0; k < charged; ++k) {
        p.modular[rng.uniform_int(0, n - 1)] = rng.uniform_int(-1, 1);
      }
      return p;
    }
    case InstanceKind::kConcaveOfCardinality: {
      // unit increments up to a peak, a flat stretch, unit decrements after
      std::int64_t rise = rng.uniform_int(1, target_m);
      std::int64_t flat = rng.uniform_int(0, n);
      ConcaveOfCardinalityPayload p{std::vector<std::int64_t>(n + 1, 0)};
      for (int k = 1; k <= n; ++k) {
        std::int64_t d = k <= rise ? 1 : (k <= rise + flat ? 0 : -1);
        p.g[k] = p.g[k - 1] + d;
      }
      return p;
    }
    case InstanceKind::kCoverage: {
      // Near-partition: most elements own a private universe point, so their
      // marginal charge cancels; a small group shares one point (negative
      // values down to 1-|group|) and a few elements carry one extra point
      // from a tiny pool (positive values). Keeps max |f| near target_m.
      CoveragePayload p;
      p.cost = 1;
      p.sets.resize(n);
      int group = static_cast<int>(
          rng.uniform_int(2, std::min<std::int64_t>(n, target_m + 1)));
      const int shared_point = 0;
      const int pool_size = static_cast<int>(rng.uniform_int(1, 2));
      int next_point = 1 + pool_size;
      for (int i = 0; i < n; ++i) {
        if (i < group) {
          p.sets[i] = {shared_point};
        } else {
          p.sets[i] = {next_point++};
          if (rng.uniform() < 0.4) {
            int extra = 1 + static_cast<int>(rng.uniform_int(0, pool_size - 1));
            p.sets[i].push_back(extra);
          }
        }
      }
      return p;
    }
    case InstanceKind::kExplicitTable: {
      // tabulate a random cut-minus-modular plus a concave-of-cardinality
      // term; sums of submodular functions stay submodular. A target of 1
      // leaves no room for the concave tail (its descent alone would blow
      // the range), so in that case the cut ingredient stands alone.
      InstancePayload cut = propose(InstanceKind::kCutMinusModular, n, target_m, rng);
      SubmodularInstance a = make_instance(InstanceKind::kCutMinusModular, n, cut);
      ExplicitTablePayload p;
      p.table.resize(std::size_t{1} << n);
      if (target_m >= 2) {
        InstancePayload card =
            propose(InstanceKind::kConcaveOfCardinality, n, 1, rng);
        SubmodularInstance b =
            make_instance(InstanceKind::kConcaveOfCardinality, n, card);
        for (std::uint64_t mask = 0; mask < p.table.size(); ++mask) {
          GroundSubset s = GroundSubset::from_mask(n, mask);
          p.table[mask] = a.value(s) + b.value(s);
        }
      } else {
        for (std::uint64_t mask = 0; mask < p.table.size(); ++mask) {
          p.table[mask] = a.value(GroundSubset::from_mask(n, mask));
        }
      }
      return p;
    }
  }
  throw std::logic_error("unknown instance kind");
}

}  // namespace

SubmodularInstance random_instance(InstanceKind kind, int n, std::int64_t target_m,
                                   std::uint64_t seed) {
  if (n < 2 || n > 20) throw std::invalid_argument("generator supports 2 <= n <= 20");
  if (target_m < 1) throw std::invalid_argument("target range bound must be positive");
  if (kind == InstanceKind::kExplicitTable && n > 14) {
    throw std::invalid_argument("explicit-table generator limited to n <= 14");
  }

  Rng rng(seed, 0x67656e /* "gen" */);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Rng attempt_rng = rng.split(attempt);
    InstancePayload payload = propose(kind, n, target_m, attempt_rng);
    SubmodularInstance inst = make_instance(kind, n, std::move(payload));
    // make_instance computed the tight bound; keep payloads that actually
    // exercise the value range without exceeding the target
    if (inst.range_bound() <= target_m) {
      bool nonconstant = false;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) && !nonconstant;
           ++mask) {
        nonconstant = inst.value(GroundSubset::from_mask(n, mask)) != 0;
      }
      if (nonconstant) return inst;
    }
  }
  throw std::runtime_error("instance generator failed to hit target range bound");
}

}  // namespace parsfm
