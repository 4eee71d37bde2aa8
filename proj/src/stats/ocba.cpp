#include "simheur/stats/ocba.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace simheur::stats {

double gap_floor(double best_mean) noexcept { return std::max(1e-9, 1e-6 * std::abs(best_mean)); }

std::vector<double> ocba_targets(std::span<const Belief> beliefs, double total) {
  const std::size_t k = beliefs.size();
  if (k < 2) throw std::invalid_argument("OCBA needs at least two solutions");
  const std::size_t b = select_best(beliefs);
  const double floor = gap_floor(beliefs[b].posterior_mean);

  std::vector<double> ratio(k, 0.0);
  double best_sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (i == b) continue;
    const double sd = beliefs[i].sample_sd();
    const double gap = std::max(beliefs[i].posterior_mean - beliefs[b].posterior_mean, floor);
    ratio[i] = (sd / gap) * (sd / gap);
    const double per_sd = ratio[i] / sd;
    best_sum += per_sd * per_sd;
  }
  ratio[b] = beliefs[b].sample_sd() * std::sqrt(best_sum);

  const double sum = std::accumulate(ratio.begin(), ratio.end(), 0.0);
  for (double& r : ratio) r = total * r / sum;
  return ratio;
}

std::vector<std::uint64_t> apportion(std::span<const double> weights, std::uint64_t total) {
  const std::size_t k = weights.size();
  std::vector<std::uint64_t> out(k, 0);
  if (k == 0) return out;
  double wsum = 0.0;
  for (double w : weights) wsum += std::max(w, 0.0);

  std::vector<double> frac(k, 0.0);
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double quota = wsum > 0.0 ? static_cast<double>(total) * std::max(weights[i], 0.0) / wsum
                                    : static_cast<double>(total) / static_cast<double>(k);
    const double fl = std::floor(quota);
    out[i] = static_cast<std::uint64_t>(fl);
    frac[i] = quota - fl;
    assigned += out[i];
  }
  // Floating error can overshoot by one in extreme cases; take it back from the smallest fractions.
  while (assigned > total) {
    std::size_t j = k;
    for (std::size_t i = 0; i < k; ++i)
      if (out[i] > 0 && (j == k || frac[i] < frac[j])) j = i;
    --out[j];
    --assigned;
    frac[j] += 1.0;
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return frac[a] > frac[c]; });
  for (std::size_t r = 0; assigned < total; r = (r + 1) % k) {
    ++out[order[r]];
    ++assigned;
  }
  return out;
}

Allocation ocba_allocate(std::span<const Belief> beliefs, std::uint64_t delta) {
  if (beliefs.size() < 2) throw std::invalid_argument("OCBA needs at least two solutions");
  if (delta == 0) throw std::invalid_argument("OCBA needs a positive budget");

  Allocation alloc;
  const bool identical = std::all_of(beliefs.begin(), beliefs.end(), [&](const Belief& x) {
    return x.posterior_mean == beliefs[0].posterior_mean &&
           x.sample_sd() == beliefs[0].sample_sd();
  });
  if (identical) {
    spdlog::debug("ocba: {} identical beliefs, splitting {} replications equally", beliefs.size(), delta);
    const std::vector<double> equal(beliefs.size(), 1.0);
    alloc.additional_reps = apportion(equal, delta);
    alloc.degenerate = true;
    return alloc;
  }

  double current = 0.0;
  for (const Belief& x : beliefs) current += static_cast<double>(x.n);
  const auto targets = ocba_targets(beliefs, current + static_cast<double>(delta));
  std::vector<double> shortfall(beliefs.size());
  for (std::size_t i = 0; i < beliefs.size(); ++i)
    shortfall[i] = std::max(0.0, targets[i] - static_cast<double>(beliefs[i].n));
  alloc.additional_reps = apportion(shortfall, delta);
  return alloc;
}

}  // namespace simheur::stats
