#include "parsfm/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace parsfm {
namespace {

std::int64_t eval_graph_cut(const std::vector<Edge>& edges, const GroundSubset& s) {
  std::int64_t total = 0;
  for (const Edge& e : edges) {
    if (s.test(e.u) != s.test(e.v)) total += e.weight;
  }
  return total;
}

std::int64_t eval_payload(const InstancePayload& payload, const GroundSubset& s) {
  struct Visitor {
    const GroundSubset& s;
    std::int64_t operator()(const GraphCutPayload& p) const {
      return eval_graph_cut(p.edges, s);
    }
    std::int64_t operator()(const CutMinusModularPayload& p) const {
      std::int64_t total = eval_graph_cut(p.edges, s);
      for (int i = 0; i < s.n(); ++i) {
        if (s.test(i)) total -= p.modular[i];
      }
      return total;
    }
    std::int64_t operator()(const ConcaveOfCardinalityPayload& p) const {
      return p.g[s.count()];
    }
    std::int64_t operator()(const CoveragePayload& p) const {
      std::int64_t covered = 0;
      std::vector<bool> seen;
      for (int i = 0; i < s.n(); ++i) {
        if (!s.test(i)) continue;
        for (int e : p.sets[i]) {
          if (static_cast<std::size_t>(e) >= seen.size()) seen.resize(e + 1, false);
          if (!seen[e]) {
            seen[e] = true;
            ++covered;
          }
        }
      }
      return covered - p.cost * s.count();
    }
    std::int64_t operator()(const ExplicitTablePayload& p) const {
      return p.table[s.mask64()];
    }
  };
  return std::visit(Visitor{s}, payload);
}

void validate_payload_shape(InstanceKind kind, int n, const InstancePayload& payload) {
  auto bad = [](const std::string& what) {
    throw std::invalid_argument("malformed payload: " + what);
  };
  switch (kind) {
    case InstanceKind::kGraphCut: {
      const auto& p = std::get<GraphCutPayload>(payload);
      for (const Edge& e : p.edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) bad("edge endpoint out of range");
        if (e.u == e.v) bad("self-loop edge");
        if (e.weight < 0) bad("negative edge weight");
      }
      break;
    }
    case InstanceKind::kCutMinusModular: {
      const auto& p = std::get<CutMinusModularPayload>(payload);
      for (const Edge& e : p.edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) bad("edge endpoint out of range");
        if (e.u == e.v) bad("self-loop edge");
        if (e.weight < 0) bad("negative edge weight");
      }
      if (static_cast<int>(p.modular.size()) != n) bad("modular weight vector length != n");
      break;
    }
    case InstanceKind::kConcaveOfCardinality: {
      const auto& p = std::get<ConcaveOfCardinalityPayload>(payload);
      if (static_cast<int>(p.g.size()) != n + 1) bad("cardinality table length != n+1");
      if (p.g[0] != 0) bad("g(0) != 0");
      // concavity of g is exactly submodularity for this kind
      for (int k = 0; k + 2 <= n; ++k) {
        if (p.g[k + 1] - p.g[k] < p.g[k + 2] - p.g[k + 1]) {
          throw ContractViolation("cardinality profile is not concave");
        }
      }
      break;
    }
    case InstanceKind::kCoverage: {
      const auto& p = std::get<CoveragePayload>(payload);
      if (static_cast<int>(p.sets.size()) != n) bad("coverage needs one set per element");
      for (const auto& set : p.sets) {
        for (int e : set) {
          if (e < 0) bad("negative universe element");
        }
      }
      break;
    }
    case InstanceKind::kExplicitTable: {
      const auto& p = std::get<ExplicitTablePayload>(payload);
      if (n > 20) bad("explicit table only supported for n <= 20");
      if (p.table.size() != (std::size_t{1} << n)) bad("table length != 2^n");
      if (p.table[0] != 0) bad("f(empty) != 0");
      break;
    }
  }
}

std::uint64_t payload_fingerprint(int n, const InstancePayload& payload) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n);
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  };
  struct Visitor {
    decltype(mix)& put;
    void operator()(const GraphCutPayload& p) const {
      for (const Edge& e : p.edges) {
        put(static_cast<std::uint64_t>(e.u) << 32 | static_cast<std::uint32_t>(e.v));
        put(static_cast<std::uint64_t>(e.weight));
      }
    }
    void operator()(const CutMinusModularPayload& p) const {
      for (const Edge& e : p.edges) {
        put(static_cast<std::uint64_t>(e.u) << 32 | static_cast<std::uint32_t>(e.v));
        put(static_cast<std::uint64_t>(e.weight));
      }
      for (std::int64_t w : p.modular) put(static_cast<std::uint64_t>(w));
    }
    void operator()(const ConcaveOfCardinalityPayload& p) const {
      for (std::int64_t v : p.g) put(static_cast<std::uint64_t>(v));
    }
    void operator()(const CoveragePayload& p) const {
      put(static_cast<std::uint64_t>(p.cost));
      for (const auto& set : p.sets) {
        put(set.size());
        for (int e : set) put(static_cast<std::uint64_t>(e));
      }
    }
    void operator()(const ExplicitTablePayload& p) const {
      for (std::int64_t v : p.table) put(static_cast<std::uint64_t>(v));
    }
  };
  std::visit(Visitor{mix}, payload);
  return h;
}

}  // namespace

std::string kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kGraphCut: return "graph-cut";
    case InstanceKind::kCutMinusModular: return "cut-minus-modular";
    case InstanceKind::kConcaveOfCardinality: return "concave-of-cardinality";
    case InstanceKind::kCoverage: return "coverage";
    case InstanceKind::kExplicitTable: return "explicit-table";
  }
  throw std::logic_error("unknown instance kind");
}

InstanceKind kind_from_name(const std::string& name) {
  if (name == "graph-cut") return InstanceKind::kGraphCut;
  if (name == "cut-minus-modular") return InstanceKind::kCutMinusModular;
  if (name == "concave-of-cardinality") return InstanceKind::kConcaveOfCardinality;
  if (name == "coverage") return InstanceKind::kCoverage;
  if (name == "explicit-table") return InstanceKind::kExplicitTable;
  throw std::invalid_argument("unknown instance kind: " + name);
}

std::int64_t SubmodularInstance::value(const GroundSubset& s) const {
  if (s.n() != n_) throw std::invalid_argument("subset from a different ground set");
  evals_.fetch_add(1, std::memory_order_relaxed);
  return eval_payload(payload_, s);
}

void SubmodularInstance::verify_range_bound() const {
  if (n_ > 20) throw std::logic_error("exhaustive range check only for n <= 20");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_); ++mask) {
    std::int64_t v = eval_payload(payload_, GroundSubset::from_mask(n_, mask));
    if (std::llabs(v) > m_) {
      throw ContractViolation("instance value outside declared range bound");
    }
  }
}

SubmodularInstance make_instance(InstanceKind kind, int n, InstancePayload payload,
                                 std::int64_t declared_m) {
  if (n < 1) throw std::invalid_argument("ground set size must be positive");
  validate_payload_shape(kind, n, payload);

  SubmodularInstance inst;
  inst.n_ = n;
  inst.kind_ = kind;
  inst.payload_ = std::move(payload);

  // f(empty) = 0 is structural for every kind except explicit tables, which
  // were checked above; cheap sanity query on the built payload anyway.
  if (eval_payload(inst.payload_, GroundSubset(n)) != 0) {
    throw ContractViolation("f(empty) != 0 after construction");
  }

  if (n <= 20) {
    std::int64_t max_abs = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::int64_t v = eval_payload(inst.payload_, GroundSubset::from_mask(n, mask));
      max_abs = std::max<std::int64_t>(max_abs, std::llabs(v));
    }
    inst.m_ = std::max<std::int64_t>(max_abs, 1);
  } else {
    if (declared_m < 1) {
      throw std::invalid_argument("n > 20 requires a caller-declared range bound");
    }
    inst.m_ = declared_m;
  }

  if (kind == InstanceKind::kExplicitTable && n <= 14) {
    SubmodularityReport report = validate_submodular(inst);
    if (!report.ok) {
      throw ContractViolation("explicit table is not submodular (element " +
                              std::to_string(report.element) + " at " +
                              report.small.to_string() + " vs " +
                              report.large.to_string() + ")");
    }
  }

  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(payload_fingerprint(n, inst.payload_)));
  inst.id_ = kind_name(kind) + "-n" + std::to_string(n) + "-M" + std::to_string(inst.m_) +
             "-" + std::string(buf, 8);
  return inst;
}

SubmodularityReport validate_submodular(const SubmodularInstance& instance) {
  const int n = instance.n();
  if (n > 14) throw std::logic_error("exhaustive submodularity check only for n <= 14");

  // Cache all values; the local condition reads each mask several times.
  std::vector<std::int64_t> f(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < f.size(); ++mask) {
    f[mask] = instance.value(GroundSubset::from_mask(n, mask));
  }

  for (std::uint64_t mask = 0; mask < f.size(); ++mask) {
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (mask & (std::uint64_t{1} << j)) continue;
        const std::uint64_t si = mask | (std::uint64_t{1} << i);
        const std::uint64_t sj = mask | (std::uint64_t{1} << j);
        if (f[si] + f[sj] < f[si | sj] + f[mask]) {
          SubmodularityReport report;
          report.ok = false;
          report.small = GroundSubset::from_mask(n, mask);
          report.large = GroundSubset::from_mask(n, sj);
          report.element = i;
          return report;
        }
      }
    }
  }
  return SubmodularityReport{};
}

}  // namespace parsfm
