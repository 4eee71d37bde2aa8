#include "simheur/kernels/batch_eval.hpp"

namespace simheur::kernels {

EvalModel EvalModel::of(const sched::Instance& instance) noexcept {
  return EvalModel{instance.setup_matrix().data(), instance.due_dates().data(), instance.num_jobs(),
                   instance.w_tardiness(), instance.w_makespan()};
}

void evaluate_batch_scalar(const EvalModel& model, const SequenceView& seq,
                           const DurationBlock& block, double* out) {
  const std::size_t n = model.num_jobs;
  for (std::size_t r = 0; r < block.count; ++r) {
    double tardiness = 0.0;
    double makespan = 0.0;
    for (std::size_t m = 0; m < seq.num_machines; ++m) {
      double completion = 0.0;
      const double* setup_row = model.setup;  // idle row
      for (std::uint32_t k = seq.offsets[m]; k < seq.offsets[m + 1]; ++k) {
        const sched::JobId j = seq.jobs[k];
        completion = completion + setup_row[j] + block.durations[j * block.stride + r];
        const double late = completion - model.due[j];
        tardiness = tardiness + (late > 0.0 ? late : 0.0);
        setup_row = model.setup + (static_cast<std::size_t>(j) + 1) * n;
      }
      makespan = completion > makespan ? completion : makespan;
    }
    out[r] = model.w_tardiness * tardiness + model.w_makespan * makespan;
  }
}

}  // namespace simheur::kernels
