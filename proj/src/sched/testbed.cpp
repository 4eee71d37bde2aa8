#include "simheur/sched/testbed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "simheur/kernels/batch_eval.hpp"

namespace simheur::sched {

double evaluate_unchecked(const Instance& instance, const Schedule& schedule,
                          std::span<const double> durations) noexcept {
  // Same operation order as kernels::evaluate_batch_scalar.
  const auto due = instance.due_dates();
  double tardiness = 0.0;
  double makespan = 0.0;
  for (const auto& seq : schedule.machine_sequences) {
    double completion = 0.0;
    bool first = true;
    JobId prev = 0;
    for (JobId j : seq) {
      const double setup = first ? instance.initial_setup(j) : instance.setup_after(prev, j);
      completion = completion + setup + durations[j];
      const double late = completion - due[j];
      tardiness = tardiness + (late > 0.0 ? late : 0.0);
      prev = j;
      first = false;
    }
    makespan = completion > makespan ? completion : makespan;
  }
  return instance.w_tardiness() * tardiness + instance.w_makespan() * makespan;
}

double evaluate(const Instance& instance, const Schedule& schedule,
                std::span<const double> durations) {
  validate(schedule, instance.num_jobs(), instance.num_machines());
  if (durations.size() != instance.num_jobs())
    throw std::invalid_argument("duration vector length does not match job count");
  return evaluate_unchecked(instance, schedule, durations);
}

double deterministic_objective(const Instance& instance, const Schedule& schedule) {
  return evaluate(instance, schedule, instance.mean_durations());
}

LognormalParams lognormal_for(double mean, double cv) noexcept {
  const double var = std::log1p(cv * cv);
  return {std::log(mean) - 0.5 * var, std::sqrt(var)};
}

namespace {

inline double draw(double mean, double cv, const LognormalParams& p, core::RngStream& stream) {
  const double z = stream.standard_normal();
  if (cv == 0.0) return mean;
  return std::exp(p.mu + p.sigma * z);
}

}  // namespace

void sample_durations_into(const Instance& instance, core::RngStream& stream,
                           std::span<double> out) noexcept {
  const auto& jobs = instance.jobs();
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const auto p = lognormal_for(jobs[j].mean_duration, jobs[j].cv);
    out[j] = draw(jobs[j].mean_duration, jobs[j].cv, p, stream);
  }
}

std::vector<double> sample_durations(const Instance& instance, core::RngStream stream) {
  std::vector<double> out(instance.num_jobs());
  sample_durations_into(instance, stream, out);
  return out;
}

double simulate(const Instance& instance, const Schedule& schedule, core::RngStream stream) {
  validate(schedule, instance.num_jobs(), instance.num_machines());
  const auto durations = sample_durations(instance, stream);
  return evaluate_unchecked(instance, schedule, durations);
}

SchedulingProblem::SchedulingProblem(Instance instance) : instance_(std::move(instance)) {
  params_.reserve(instance_.num_jobs());
  for (const Job& job : instance_.jobs()) params_.push_back(lognormal_for(job.mean_duration, job.cv));
}

double SchedulingProblem::deterministic_objective(const Schedule& schedule) const {
  return sched::deterministic_objective(instance_, schedule);
}

double SchedulingProblem::simulate(const Schedule& schedule, core::RngStream stream) const {
  return sched::simulate(instance_, schedule, stream);
}

void SchedulingProblem::simulate_batch(const Schedule& schedule,
                                       std::span<const core::RngStream> streams,
                                       std::span<double> out) const {
  validate(schedule, instance_.num_jobs(), instance_.num_machines());
  if (out.size() < streams.size()) throw std::invalid_argument("output span too short");

  constexpr std::size_t kBlock = 64;
  const std::size_t n = instance_.num_jobs();
  const auto& jobs = instance_.jobs();
  const FlatSchedule flat(schedule);
  const kernels::SequenceView seq{flat.jobs.data(), flat.offsets.data(), flat.offsets.size() - 1};
  const auto model = kernels::EvalModel::of(instance_);
  std::vector<double> block(n * kBlock);

  for (std::size_t base = 0; base < streams.size(); base += kBlock) {
    const std::size_t count = std::min(kBlock, streams.size() - base);
    for (std::size_t r = 0; r < count; ++r) {
      core::RngStream stream = streams[base + r];
      for (std::size_t j = 0; j < n; ++j)
        block[j * kBlock + r] = draw(jobs[j].mean_duration, jobs[j].cv, params_[j], stream);
    }
    kernels::evaluate_batch(model, seq, {block.data(), kBlock, count}, out.subspan(base, count));
  }
}

}  // namespace simheur::sched
