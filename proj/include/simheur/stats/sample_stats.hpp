#pragma once

#include <cstdint>
#include <span>

namespace simheur::stats {

/// Single-pass mean and sum of squared deviations (Welford; Chan et al. merge).
struct SampleStats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  /// Sample variance m2 / (n - 1); 0 for n < 2.
  double variance() const noexcept { return n >= 2 ? m2 / static_cast<double>(n - 1) : 0.0; }
};

/// Throws NonFiniteSample for NaN or infinite input.
SampleStats update(SampleStats stats, double sample);
void accumulate(SampleStats& stats, double sample);
void accumulate(SampleStats& stats, std::span<const double> samples);

SampleStats merge(const SampleStats& a, const SampleStats& b) noexcept;

}  // namespace simheur::stats
