#include "simheur/kernels/batch_eval.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace simheur::kernels {

// Two replications per lane pair. vmaxq_f64 differs from the scalar ternary
// only for NaN inputs, which the objective never produces.
void evaluate_batch_neon(const EvalModel& model, const SequenceView& seq,
                         const DurationBlock& block, double* out) {
  const std::size_t n = model.num_jobs;
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t w_t = vdupq_n_f64(model.w_tardiness);
  const float64x2_t w_m = vdupq_n_f64(model.w_makespan);

  std::size_t r = 0;
  for (; r + 2 <= block.count; r += 2) {
    float64x2_t tardiness = zero;
    float64x2_t makespan = zero;
    for (std::size_t m = 0; m < seq.num_machines; ++m) {
      float64x2_t completion = zero;
      const double* setup_row = model.setup;
      for (std::uint32_t k = seq.offsets[m]; k < seq.offsets[m + 1]; ++k) {
        const sched::JobId j = seq.jobs[k];
        const float64x2_t dur = vld1q_f64(block.durations + j * block.stride + r);
        completion = vaddq_f64(vaddq_f64(completion, vdupq_n_f64(setup_row[j])), dur);
        const float64x2_t late = vsubq_f64(completion, vdupq_n_f64(model.due[j]));
        tardiness = vaddq_f64(tardiness, vmaxq_f64(late, zero));
        setup_row = model.setup + (static_cast<std::size_t>(j) + 1) * n;
      }
      makespan = vmaxq_f64(completion, makespan);
    }
    vst1q_f64(out + r, vaddq_f64(vmulq_f64(w_t, tardiness), vmulq_f64(w_m, makespan)));
  }

  if (r < block.count) {
    DurationBlock tail{block.durations + r, block.stride, block.count - r};
    evaluate_batch_scalar(model, seq, tail, out + r);
  }
}

}  // namespace simheur::kernels

#endif
