#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "simheur/stats/sample_stats.hpp"

namespace simheur::stats {

/// Normal posterior over a solution's true expected objective under a
/// non-informative prior: N(sample mean, max(s^2, floor) / n).
struct Belief {
  double posterior_mean = 0.0;
  double posterior_var = 1.0;
  std::uint64_t n = 1;

  /// Per-replication standard deviation implied by the posterior.
  double sample_sd() const noexcept;
};

/// 1e-12 * (1 + mean^2)
double variance_floor(double mean) noexcept;

/// Throws std::invalid_argument when stats.n < min_reps (or min_reps == 0).
Belief make_belief(const SampleStats& stats, std::uint64_t min_reps);

/// Index of the smallest posterior mean; ties go to the lowest index.
/// Precondition: nonempty.
std::size_t select_best(std::span<const Belief> beliefs);

double normal_pdf(double x) noexcept;
double normal_cdf(double x) noexcept;

/// Bonferroni upper bound on the expected opportunity cost of selecting
/// select_best(beliefs):
///   sum over i != b of s_i * pdf(d_i / s_i) - d_i * cdf(-d_i / s_i)
/// with d_i the posterior mean gap to the selected solution and
/// s_i = sqrt(var_b + var_i). Zero for a single belief.
double eoc_bonferroni(std::span<const Belief> beliefs);

}  // namespace simheur::stats
