#pragma once

#include <cstddef>
#include <cstdint>

#include "simheur/sched/instance.hpp"

namespace simheur::sched {

/// Synthetic instance shape. Due dates follow the tardiness-factor / due-date
/// range scheme around the estimated per-machine load.
struct GeneratorParams {
  double dur_lo = 10.0;
  double dur_hi = 100.0;
  double setup_lo = 1.0;
  double setup_hi = 20.0;
  double tardiness_factor = 0.4;
  double due_date_range = 0.6;
  double cv = 0.5;
  double w_tardiness = 1.0;
  double w_makespan = 0.1;
};

/// Deterministic in `seed`. Draw order: mean durations, then the setup matrix
/// row by row (self-setups are zero and not drawn), then due dates.
Instance generate_instance(std::size_t num_jobs, std::size_t num_machines, std::uint64_t seed,
                           const GeneratorParams& params = {});

/// (sum of means + average setup * num_jobs) / num_machines
double estimated_machine_load(const Instance& instance);

}  // namespace simheur::sched
