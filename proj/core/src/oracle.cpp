#include "parsfm/oracle.hpp"

#include <cstdlib>
#include <stdexcept>

namespace parsfm {

std::string OracleLedger::report() const {
  return "rounds=" + std::to_string(rounds) + " queries=" + std::to_string(total_queries) +
         " distinct=" + std::to_string(distinct_queries);
}

EvaluationOracle::EvaluationOracle(const SubmodularInstance& instance,
                                   OracleLedger& ledger, bool memoize)
    : instance_(instance), ledger_(&ledger), memoize_(memoize) {}

std::vector<std::int64_t> EvaluationOracle::evaluate(const QueryBatch& batch) {
  if (batch.subsets.empty()) {
    throw std::invalid_argument("query batch must be non-empty");
  }
  std::vector<std::int64_t> values;
  values.reserve(batch.subsets.size());

  for (const GroundSubset& s : batch.subsets) {
    if (s.n() != instance_.n()) {
      throw std::invalid_argument("query subset outside instance ground set");
    }
    auto it = seen_.find(CacheEntry{s, 0});
    std::int64_t v;
    if (it != seen_.end()) {
      v = memoize_ ? it->value : instance_.value(s);
    } else {
      v = instance_.value(s);
      seen_.insert(CacheEntry{s, v});
      ++ledger_->distinct_queries;
    }
    if (std::llabs(v) > instance_.range_bound()) {
      throw ContractViolation("oracle returned value outside declared range bound");
    }
    values.push_back(v);
  }

  ledger_->total_queries += static_cast<std::int64_t>(batch.subsets.size());
  ledger_->rounds += 1;
  return values;
}

}  // namespace parsfm
