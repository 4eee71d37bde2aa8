#include "simheur/sched/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace simheur::sched {

Instance::Instance(std::vector<Job> jobs, std::size_t num_machines,
                   std::vector<double> setup_row_major, double w_tardiness, double w_makespan)
    : jobs_(std::move(jobs)),
      num_machines_(num_machines),
      setup_(std::move(setup_row_major)),
      w_tardiness_(w_tardiness),
      w_makespan_(w_makespan) {
  const std::size_t n = jobs_.size();
  if (n == 0) throw std::invalid_argument("instance needs at least one job");
  if (num_machines_ == 0) throw std::invalid_argument("instance needs at least one machine");
  if (setup_.size() != (n + 1) * n)
    throw std::invalid_argument("setup matrix must be (num_jobs+1) x num_jobs, got " +
                                std::to_string(setup_.size()) + " entries for " +
                                std::to_string(n) + " jobs");
  for (double s : setup_)
    if (!std::isfinite(s) || s < 0.0)
      throw std::invalid_argument("setup times must be finite and nonnegative");
  if (!(w_tardiness_ >= 0.0) || !(w_makespan_ >= 0.0) || !(w_tardiness_ + w_makespan_ > 0.0))
    throw std::invalid_argument("objective weights must be nonnegative with a positive sum");

  means_.reserve(n);
  due_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Job& job = jobs_[j];
    if (job.id != j)
      throw std::invalid_argument("job ids must be 0..num_jobs-1 in order; job at position " +
                                  std::to_string(j) + " has id " + std::to_string(job.id));
    if (!(job.mean_duration > 0.0) || !std::isfinite(job.mean_duration))
      throw std::invalid_argument("job " + std::to_string(j) + ": mean_duration must be positive");
    if (!(job.cv >= 0.0) || !std::isfinite(job.cv))
      throw std::invalid_argument("job " + std::to_string(j) + ": cv must be nonnegative");
    if (!std::isfinite(job.due_date))
      throw std::invalid_argument("job " + std::to_string(j) + ": due_date must be finite");
    means_.push_back(job.mean_duration);
    due_.push_back(job.due_date);
  }
}

}  // namespace simheur::sched
