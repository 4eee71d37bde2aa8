#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "simheur/core/rng.hpp"
#include "simheur/sched/instance.hpp"
#include "simheur/sched/schedule.hpp"
#include "simheur/stats/sample_stats.hpp"

namespace simheur::bench {

/// Number of distinct schedules of n jobs on m labelled machines:
/// n! * C(n + m - 1, m - 1), i.e. the sum over assignments of the product of
/// per-machine orderings. Saturates at ULLONG_MAX.
unsigned long long schedule_count(std::size_t num_jobs, std::size_t num_machines) noexcept;

/// Default guard: 8 jobs on 2 machines.
inline constexpr unsigned long long kMaxEnumeration = 362880;

/// Calls `visit` once per valid schedule. Throws TooLargeToEnumerate when
/// schedule_count exceeds `max_count`.
void for_each_schedule(std::size_t num_jobs, std::size_t num_machines,
                       const std::function<void(const sched::Schedule&)>& visit,
                       unsigned long long max_count = kMaxEnumeration);
std::vector<sched::Schedule> enumerate_schedules(std::size_t num_jobs, std::size_t num_machines,
                                                 unsigned long long max_count = kMaxEnumeration);

/// Stream for common-random-number replication `rep` under `seed`: the same
/// duration realization for every schedule evaluated with that seed.
core::RngStream crn_stream(std::uint64_t seed, std::uint64_t rep) noexcept;

/// Estimates E[f(X, s)] for each schedule with `reps` shared realizations.
std::vector<stats::SampleStats> crn_estimate(const sched::Instance& instance,
                                             const std::vector<sched::Schedule>& schedules,
                                             std::uint64_t reps, std::uint64_t seed);

struct OracleEntry {
  sched::Schedule schedule;
  double det_value = 0.0;
  stats::SampleStats stats;
  std::size_t det_rank = 0;         // 0 = deterministic optimum
  std::size_t stochastic_rank = 0;  // 0 = best estimated expected objective
};

struct OracleReport {
  std::vector<OracleEntry> entries;  // enumeration order
  std::size_t det_best = 0;
  std::size_t stochastic_best = 0;
  std::uint64_t eval_reps = 0;

  /// Position in `entries` of a schedule; throws std::out_of_range if absent.
  std::size_t index_of(const sched::Schedule& schedule) const;
};

OracleReport run_oracle(const sched::Instance& instance, std::uint64_t eval_reps, std::uint64_t seed,
                        unsigned long long max_count = kMaxEnumeration);

}  // namespace simheur::bench
