#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "parsfm/ground_subset.hpp"
#include "parsfm/instance.hpp"

namespace parsfm {

// One parallel round of evaluation queries. Submitting a batch costs exactly
// one round regardless of size; duplicates are legal and each listed subset
// counts as one issued query.
struct QueryBatch {
  std::vector<GroundSubset> subsets;
};

struct OracleLedger {
  std::int64_t total_queries = 0;
  std::int64_t rounds = 0;
  std::int64_t distinct_queries = 0;

  std::string report() const;
};

// Metered access to an instance. All solver-side f-values must flow through
// evaluate(); the instance's raw evaluation counter lets tests prove that.
// Memoization is opt-in and only short-circuits repeat payload evaluations;
// issued-query accounting is unchanged by it.
class EvaluationOracle {
 public:
  EvaluationOracle(const SubmodularInstance& instance, OracleLedger& ledger,
                   bool memoize = false);

  std::vector<std::int64_t> evaluate(const QueryBatch& batch);

  const SubmodularInstance& instance() const { return instance_; }
  const OracleLedger& ledger() const { return *ledger_; }
  bool memoize() const { return memoize_; }

 private:
  struct CacheEntry {
    GroundSubset subset;
    std::int64_t value;
    bool operator==(const CacheEntry& other) const { return subset == other.subset; }
  };
  struct CacheHash {
    std::size_t operator()(const CacheEntry& e) const { return e.subset.hash(); }
  };

  const SubmodularInstance& instance_;
  OracleLedger* ledger_;
  bool memoize_;
  std::unordered_set<CacheEntry, CacheHash> seen_;
};

}  // namespace parsfm
