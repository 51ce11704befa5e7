#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "parsfm/oracle.hpp"

namespace parsfm {

// Sorted-prefix view of f along the chain induced by a point x: pi sorts
// coordinates descending (ties by ascending index), prefix_values[j] =
// f({pi[0..j-1]}) with prefix_values[0] = f(empty) = 0.
struct ChainDecomposition {
  std::vector<int> pi;
  std::vector<std::int64_t> prefix_values;  // n + 1 entries
};

// Builds the chain's prefix sets for a point; shared by single and batched
// decomposition so callers can assemble multi-point query batches by hand.
std::vector<int> chain_order(const Eigen::VectorXd& x);

// One batch of n queries (the empty prefix is free).
ChainDecomposition chain_decompose(const Eigen::VectorXd& x, EvaluationOracle& oracle);

// Chains for many points in a single batch of points.size() * n queries;
// this is what keeps one sample group equal to one parallel round.
std::vector<ChainDecomposition> chain_decompose_many(
    const std::vector<Eigen::VectorXd>& points, EvaluationOracle& oracle);

// Interpolated extension value sum_i x_pi(i) * (F_i - F_{i-1}); agrees with f
// on indicator vectors and is convex on [0,1]^n.
double lovasz_value(const ChainDecomposition& chain, const Eigen::VectorXd& x);

// Subgradient g with g_pi(i) = F_i - F_{i-1}; ||g||_1 <= 3M and at most M
// entries are strictly positive for integer-valued f.
Eigen::VectorXd lovasz_subgradient(const ChainDecomposition& chain);

// Best prefix of an existing chain: argmin_j prefix_values[j], smallest j on
// ties. Costs no extra queries; for x in [0,1]^n the returned value is at
// most the extension value at x.
std::pair<GroundSubset, std::int64_t> threshold_round(const ChainDecomposition& chain);

}  // namespace parsfm
