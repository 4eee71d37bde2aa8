#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace simheur::sched {

using JobId = std::uint32_t;

struct Job {
  JobId id = 0;
  double mean_duration = 1.0;  // E[X_j]
  double cv = 0.0;             // coefficient of variation; 0 means deterministic
  double due_date = 0.0;
};

/// Parallel identical machines with sequence-dependent setups.
///
/// The setup matrix has num_jobs + 1 rows and num_jobs columns: row 0 is the
/// initial setup from an idle machine, row i + 1 the setup when a job follows
/// job i. Immutable after construction.
class Instance {
 public:
  Instance(std::vector<Job> jobs, std::size_t num_machines, std::vector<double> setup_row_major,
           double w_tardiness, double w_makespan);

  std::size_t num_jobs() const noexcept { return jobs_.size(); }
  std::size_t num_machines() const noexcept { return num_machines_; }
  const std::vector<Job>& jobs() const noexcept { return jobs_; }
  const Job& job(JobId j) const { return jobs_[j]; }

  double initial_setup(JobId next) const noexcept { return setup_[next]; }
  double setup_after(JobId prev, JobId next) const noexcept {
    return setup_[(static_cast<std::size_t>(prev) + 1) * jobs_.size() + next];
  }
  std::span<const double> setup_matrix() const noexcept { return setup_; }

  double w_tardiness() const noexcept { return w_tardiness_; }
  double w_makespan() const noexcept { return w_makespan_; }

  std::span<const double> mean_durations() const noexcept { return means_; }
  std::span<const double> due_dates() const noexcept { return due_; }

 private:
  std::vector<Job> jobs_;
  std::size_t num_machines_;
  std::vector<double> setup_;
  double w_tardiness_;
  double w_makespan_;
  std::vector<double> means_;
  std::vector<double> due_;
};

}  // namespace simheur::sched
