#include "simheur/stats/belief.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace simheur::stats {

double Belief::sample_sd() const noexcept {
  return std::sqrt(static_cast<double>(n) * posterior_var);
}

double variance_floor(double mean) noexcept { return 1e-12 * (1.0 + mean * mean); }

Belief make_belief(const SampleStats& stats, std::uint64_t min_reps) {
  if (min_reps == 0) throw std::invalid_argument("minimum replications must be positive");
  if (stats.n < min_reps)
    throw std::invalid_argument("belief needs at least " + std::to_string(min_reps) +
                                " replications, have " + std::to_string(stats.n));
  const double var = std::max(stats.variance(), variance_floor(stats.mean));
  return Belief{stats.mean, var / static_cast<double>(stats.n), stats.n};
}

std::size_t select_best(std::span<const Belief> beliefs) {
  if (beliefs.empty()) throw std::invalid_argument("select_best of an empty list");
  std::size_t best = 0;
  for (std::size_t i = 1; i < beliefs.size(); ++i)
    if (beliefs[i].posterior_mean < beliefs[best].posterior_mean) best = i;
  return best;
}

double normal_pdf(double x) noexcept {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double eoc_bonferroni(std::span<const Belief> beliefs) {
  if (beliefs.size() <= 1) return 0.0;
  const std::size_t b = select_best(beliefs);
  double total = 0.0;
  for (std::size_t i = 0; i < beliefs.size(); ++i) {
    if (i == b) continue;
    const double d = beliefs[i].posterior_mean - beliefs[b].posterior_mean;
    const double s = std::sqrt(beliefs[b].posterior_var + beliefs[i].posterior_var);
    const double z = d / s;
    // Normal linear loss; clamp tiny negative values from cancellation at large z.
    const double term = s * normal_pdf(z) - d * normal_cdf(-z);
    if (term > 0.0) total += term;
  }
  return total;
}

}  // namespace simheur::stats
