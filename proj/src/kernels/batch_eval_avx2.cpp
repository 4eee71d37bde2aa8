// Compiled with -mavx2 (and without -mfma); only reached after a runtime CPU check.
#include "simheur/kernels/batch_eval.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace simheur::kernels {

void evaluate_batch_avx2(const EvalModel& model, const SequenceView& seq,
                         const DurationBlock& block, double* out) {
  const std::size_t n = model.num_jobs;
  const __m256d zero = _mm256_setzero_pd();
  const __m256d w_t = _mm256_set1_pd(model.w_tardiness);
  const __m256d w_m = _mm256_set1_pd(model.w_makespan);

  std::size_t r = 0;
  for (; r + 4 <= block.count; r += 4) {
    __m256d tardiness = zero;
    __m256d makespan = zero;
    for (std::size_t m = 0; m < seq.num_machines; ++m) {
      __m256d completion = zero;
      const double* setup_row = model.setup;
      for (std::uint32_t k = seq.offsets[m]; k < seq.offsets[m + 1]; ++k) {
        const sched::JobId j = seq.jobs[k];
        const __m256d dur = _mm256_loadu_pd(block.durations + j * block.stride + r);
        completion = _mm256_add_pd(_mm256_add_pd(completion, _mm256_set1_pd(setup_row[j])), dur);
        const __m256d late = _mm256_sub_pd(completion, _mm256_set1_pd(model.due[j]));
        // max_pd(a, b) yields a when a > b, else b: matches `late > 0 ? late : 0`.
        tardiness = _mm256_add_pd(tardiness, _mm256_max_pd(late, zero));
        setup_row = model.setup + (static_cast<std::size_t>(j) + 1) * n;
      }
      makespan = _mm256_max_pd(completion, makespan);
    }
    const __m256d obj = _mm256_add_pd(_mm256_mul_pd(w_t, tardiness), _mm256_mul_pd(w_m, makespan));
    _mm256_storeu_pd(out + r, obj);
  }

  if (r < block.count) {
    DurationBlock tail{block.durations + r, block.stride, block.count - r};
    evaluate_batch_scalar(model, seq, tail, out + r);
  }
}

}  // namespace simheur::kernels

#endif
