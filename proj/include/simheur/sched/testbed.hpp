#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "simheur/core/problem.hpp"
#include "simheur/core/rng.hpp"
#include "simheur/sched/instance.hpp"
#include "simheur/sched/schedule.hpp"

namespace simheur::sched {

/// w_T * sum_j max(0, C_j - due_j) + w_M * max over machines of last completion.
/// Throws InvalidSchedule if `schedule` is not a partition of the jobs.
double evaluate(const Instance& instance, const Schedule& schedule,
                std::span<const double> durations);

/// As evaluate() without the partition check. For hot loops over schedules
/// already known to be valid.
double evaluate_unchecked(const Instance& instance, const Schedule& schedule,
                          std::span<const double> durations) noexcept;

/// evaluate() with every duration at its mean.
double deterministic_objective(const Instance& instance, const Schedule& schedule);

/// One lognormal draw per job with E = mean_duration and CV = cv. Always
/// consumes two stream outputs per job, so streams stay aligned across jobs
/// with and without variability.
std::vector<double> sample_durations(const Instance& instance, core::RngStream stream);
void sample_durations_into(const Instance& instance, core::RngStream& stream,
                           std::span<double> out) noexcept;

double simulate(const Instance& instance, const Schedule& schedule, core::RngStream stream);

/// Lognormal (mu, sigma) such that E = mean and CV = cv.
struct LognormalParams {
  double mu;
  double sigma;
};
LognormalParams lognormal_for(double mean, double cv) noexcept;

/// The scheduling testbed behind the generic problem interface. Batched
/// simulation samples a job-major duration block and hands it to the active
/// SIMD kernel.
class SchedulingProblem final : public core::Problem<Schedule> {
 public:
  explicit SchedulingProblem(Instance instance);

  const Instance& instance() const noexcept { return instance_; }

  double deterministic_objective(const Schedule& schedule) const override;
  double simulate(const Schedule& schedule, core::RngStream stream) const override;
  void simulate_batch(const Schedule& schedule, std::span<const core::RngStream> streams,
                      std::span<double> out) const override;

 private:
  Instance instance_;
  std::vector<LognormalParams> params_;
};

}  // namespace simheur::sched
