#pragma once

// Batched objective evaluation: one schedule, many duration realizations.
//
// Each kernel evaluates the weighted tardiness + makespan objective for
// `count` replications at once, with replications laid out in lanes. The
// scalar kernel is the reference; the vector kernels perform the same
// operations in the same order (no fused multiply-add), so every variant is
// bit-identical to the scalar one. Equivalence is tested, not assumed.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "simheur/sched/instance.hpp"

namespace simheur::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa) noexcept;

/// Borrowed view of an instance's evaluation data.
struct EvalModel {
  const double* setup = nullptr;  // (num_jobs + 1) x num_jobs, row 0 = from idle
  const double* due = nullptr;
  std::size_t num_jobs = 0;
  double w_tardiness = 0.0;
  double w_makespan = 0.0;

  static EvalModel of(const sched::Instance& instance) noexcept;
};

/// Durations laid out job-major: durations[j * stride + r] is job j in
/// replication r, for r < count.
struct DurationBlock {
  const double* durations = nullptr;
  std::size_t stride = 0;
  std::size_t count = 0;
};

/// Machine sequences flattened: jobs[offsets[m] .. offsets[m + 1]).
struct SequenceView {
  const sched::JobId* jobs = nullptr;
  const std::uint32_t* offsets = nullptr;
  std::size_t num_machines = 0;
};

using BatchEvalFn = void (*)(const EvalModel&, const SequenceView&, const DurationBlock&,
                             double* out);

void evaluate_batch_scalar(const EvalModel& model, const SequenceView& seq,
                           const DurationBlock& block, double* out);
#if defined(__x86_64__) || defined(__i386__)
void evaluate_batch_avx2(const EvalModel& model, const SequenceView& seq,
                         const DurationBlock& block, double* out);
#endif
#if defined(__aarch64__)
void evaluate_batch_neon(const EvalModel& model, const SequenceView& seq,
                         const DurationBlock& block, double* out);
#endif

bool isa_supported(Isa isa) noexcept;
/// Best variant the running CPU supports.
Isa detected_isa() noexcept;
/// Variant used by evaluate_batch. Defaults to detected_isa(), or to the
/// SIMHEUR_ISA environment variable (scalar|avx2|neon) when set and supported.
Isa active_isa() noexcept;
/// Throws std::invalid_argument if the CPU lacks `isa`.
void set_active_isa(Isa isa);
BatchEvalFn kernel_for(Isa isa);

/// Dispatches to the active kernel.
void evaluate_batch(const EvalModel& model, const SequenceView& seq, const DurationBlock& block,
                    std::span<double> out);

}  // namespace simheur::kernels
