#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "simheur/stats/belief.hpp"

namespace simheur::stats {

struct Allocation {
  std::vector<std::uint64_t> additional_reps;  // sums to the granted budget exactly
  bool degenerate = false;                     // fell back to an equal split
};

/// Floor applied to a mean gap to the current best: max(1e-9, 1e-6 * |best mean|).
double gap_floor(double best_mean) noexcept;

/// Cumulative OCBA target counts scaled to sum to `total`, minimizing.
///
/// For non-best i, j: N_i / N_j = (sd_i / gap_i)^2 / (sd_j / gap_j)^2, and for
/// the best b: N_b = sd_b * sqrt(sum_{i != b} (N_i / sd_i)^2), where sd is the
/// per-replication standard deviation and gap_i = mean_i - mean_b (floored).
std::vector<double> ocba_targets(std::span<const Belief> beliefs, double total);

/// Splits `total` in proportion to `weights` by largest remainder; ties in the
/// fractional part go to the lower index. All-zero weights split equally.
std::vector<std::uint64_t> apportion(std::span<const double> weights, std::uint64_t total);

/// Replications to add per solution this round. Targets are computed for the
/// cumulative budget (current counts + delta); the positive shortfalls
/// target - n are then apportioned to exactly `delta`. When every mean and
/// variance is identical the rule is undefined and the split is equal.
/// Throws std::invalid_argument for fewer than two beliefs or delta == 0.
Allocation ocba_allocate(std::span<const Belief> beliefs, std::uint64_t delta);

}  // namespace simheur::stats
