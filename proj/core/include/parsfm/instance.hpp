#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "parsfm/ground_subset.hpp"

namespace parsfm {

enum class InstanceKind {
  kGraphCut,
  kCutMinusModular,
  kConcaveOfCardinality,
  kCoverage,
  kExplicitTable,
};

std::string kind_name(InstanceKind kind);
InstanceKind kind_from_name(const std::string& name);

struct Edge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 1;
};

// f(S) = total weight of edges with exactly one endpoint in S.
struct GraphCutPayload {
  std::vector<Edge> edges;
};

// f(S) = cut(S) - sum_{i in S} modular[i].
struct CutMinusModularPayload {
  std::vector<Edge> edges;
  std::vector<std::int64_t> modular;
};

// f(S) = g(|S|), g concave with g(0) = 0; g has n+1 entries.
struct ConcaveOfCardinalityPayload {
  std::vector<std::int64_t> g;
};

// f(S) = |union of sets[i] for i in S| - cost * |S|.
struct CoveragePayload {
  std::vector<std::vector<int>> sets;
  std::int64_t cost = 1;
};

// Full value table indexed by bitmask; only for n <= 20.
struct ExplicitTablePayload {
  std::vector<std::int64_t> table;
};

using InstancePayload = std::variant<GraphCutPayload, CutMinusModularPayload,
                                     ConcaveOfCardinalityPayload, CoveragePayload,
                                     ExplicitTablePayload>;

// Thrown when an instance breaks its declared contract (value outside
// [-M, M], non-submodular explicit table, malformed payload, ...).
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Set function over {0,...,n-1} with f(empty) = 0 and |f| <= range_bound.
// Instances are immutable after construction and safe for concurrent reads;
// the evaluation counter exists so tests can prove that solvers obtain all
// values through the metered oracle and nothing else.
class SubmodularInstance {
 public:
  int n() const { return n_; }
  std::int64_t range_bound() const { return m_; }  // the declared M
  InstanceKind kind() const { return kind_; }
  const InstancePayload& payload() const { return payload_; }
  const std::string& id() const { return id_; }

  // Raw payload evaluation. Counted in evaluations(); everything except the
  // metered oracle and offline verification helpers should stay away.
  std::int64_t value(const GroundSubset& s) const;
  std::int64_t evaluations() const { return evals_.load(std::memory_order_relaxed); }

  // Exhaustive |f(S)| <= M check; only for n <= 20.
  void verify_range_bound() const;

 private:
  friend SubmodularInstance make_instance(InstanceKind, int, InstancePayload,
                                          std::int64_t);
  SubmodularInstance() = default;

  int n_ = 0;
  std::int64_t m_ = 1;
  InstanceKind kind_ = InstanceKind::kGraphCut;
  InstancePayload payload_;
  std::string id_;
  mutable std::atomic<std::int64_t> evals_{0};

 public:
  SubmodularInstance(const SubmodularInstance& other)
      : n_(other.n_), m_(other.m_), kind_(other.kind_), payload_(other.payload_),
        id_(other.id_), evals_(0) {}
  SubmodularInstance& operator=(const SubmodularInstance&) = delete;
  SubmodularInstance(SubmodularInstance&& other) noexcept
      : n_(other.n_), m_(other.m_), kind_(other.kind_),
        payload_(std::move(other.payload_)), id_(std::move(other.id_)), evals_(0) {}
};

// Builds and validates an instance. For n <= 20 the declared range bound is
// recomputed exhaustively (tight M = max |f|, floored at 1); for larger n the
// caller-declared bound is trusted. Explicit tables with n <= 14 are checked
// for submodularity and rejected on violation.
SubmodularInstance make_instance(InstanceKind kind, int n, InstancePayload payload,
                                 std::int64_t declared_m = 0);

struct SubmodularityReport {
  bool ok = true;
  // First violated diminishing-returns triple: marginal of `element` at
  // `small` is smaller than at `large` even though small is a subset of large.
  GroundSubset small;
  GroundSubset large;
  int element = -1;
};

// Exhaustive diminishing-returns check via the pairwise local condition
// f(S+i) + f(S+j) >= f(S+i+j) + f(S); only for n <= 14.
SubmodularityReport validate_submodular(const SubmodularInstance& instance);

}  // namespace parsfm
