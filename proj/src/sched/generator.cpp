#include "simheur/sched/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "simheur/core/rng.hpp"

namespace simheur::sched {

namespace {

constexpr std::uint64_t kGeneratorTag = 0x67656E5F696E7374ULL;  // "gen_inst"

double average_setup(std::span<const double> setup, std::size_t n) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t row = 0; row <= n; ++row)
    for (std::size_t col = 0; col < n; ++col) {
      if (row > 0 && row - 1 == col) continue;
      sum += setup[row * n + col];
      ++count;
    }
  return count > 0 ? sum / static_cast<double>(count) : 0.0;
}

}  // namespace

double estimated_machine_load(const Instance& instance) {
  const std::size_t n = instance.num_jobs();
  double total = 0.0;
  for (double m : instance.mean_durations()) total += m;
  total += average_setup(instance.setup_matrix(), n) * static_cast<double>(n);
  return total / static_cast<double>(instance.num_machines());
}

Instance generate_instance(std::size_t num_jobs, std::size_t num_machines, std::uint64_t seed,
                           const GeneratorParams& params) {
  if (num_jobs == 0 || num_machines == 0)
    throw std::invalid_argument("generate_instance needs num_jobs >= 1 and num_machines >= 1");
  if (!(params.dur_lo > 0.0) || params.dur_hi < params.dur_lo)
    throw std::invalid_argument("duration range must satisfy 0 < dur_lo <= dur_hi");
  if (params.setup_lo < 0.0 || params.setup_hi < params.setup_lo)
    throw std::invalid_argument("setup range must satisfy 0 <= setup_lo <= setup_hi");

  core::RngStream rng(seed, kGeneratorTag);
  const std::size_t n = num_jobs;

  std::vector<Job> jobs(n);
  double mean_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    jobs[j].id = static_cast<JobId>(j);
    jobs[j].mean_duration = rng.uniform(params.dur_lo, params.dur_hi);
    jobs[j].cv = params.cv;
    mean_sum += jobs[j].mean_duration;
  }

  std::vector<double> setup((n + 1) * n, 0.0);
  for (std::size_t row = 0; row <= n; ++row)
    for (std::size_t col = 0; col < n; ++col) {
      if (row > 0 && row - 1 == col) continue;
      setup[row * n + col] = rng.uniform(params.setup_lo, params.setup_hi);
    }

  const double load = (mean_sum + average_setup(setup, n) * static_cast<double>(n)) /
                      static_cast<double>(num_machines);
  const double lo = load * (1.0 - params.tardiness_factor - params.due_date_range / 2.0);
  const double hi = load * (1.0 - params.tardiness_factor + params.due_date_range / 2.0);
  for (auto& job : jobs) job.due_date = std::max(0.0, rng.uniform(lo, hi));

  return Instance(std::move(jobs), num_machines, std::move(setup), params.w_tardiness,
                  params.w_makespan);
}

}  // namespace simheur::sched
