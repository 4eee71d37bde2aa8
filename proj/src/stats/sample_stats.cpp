#include "simheur/stats/sample_stats.hpp"

#include <cmath>
#include <string>

#include "simheur/core/errors.hpp"

namespace simheur::stats {

void accumulate(SampleStats& s, double x) {
  if (!std::isfinite(x)) throw NonFiniteSample("non-finite sample: " + std::to_string(x));
  ++s.n;
  const double delta = x - s.mean;
  s.mean += delta / static_cast<double>(s.n);
  s.m2 += delta * (x - s.mean);
}

void accumulate(SampleStats& s, std::span<const double> samples) {
  for (double x : samples) accumulate(s, x);
}

SampleStats update(SampleStats stats, double sample) {
  accumulate(stats, sample);
  return stats;
}

SampleStats merge(const SampleStats& a, const SampleStats& b) noexcept {
  if (a.n == 0) return b;
  if (b.n == 0) return a;
  SampleStats out;
  out.n = a.n + b.n;
  const double na = static_cast<double>(a.n);
  const double nb = static_cast<double>(b.n);
  const double nt = static_cast<double>(out.n);
  const double delta = b.mean - a.mean;
  out.mean = a.mean + delta * (nb / nt);
  out.m2 = a.m2 + b.m2 + delta * delta * (na * nb / nt);
  return out;
}

}  // namespace simheur::stats
