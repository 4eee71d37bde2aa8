#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "simheur/kernels/batch_eval.hpp"

namespace simheur::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

namespace {

Isa initial_isa() noexcept {
  if (const char* env = std::getenv("SIMHEUR_ISA")) {
    const std::string_view want = env;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
      if (want == to_string(isa) && isa_supported(isa)) return isa;
  }
  return detected_isa();
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa))
    throw std::invalid_argument("instruction set not supported on this CPU: " +
                                std::string(to_string(isa)));
  active().store(isa, std::memory_order_relaxed);
}

BatchEvalFn kernel_for(Isa isa) {
  if (!isa_supported(isa))
    throw std::invalid_argument("instruction set not supported on this CPU: " +
                                std::string(to_string(isa)));
  switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::avx2: return &evaluate_batch_avx2;
#endif
#if defined(__aarch64__)
    case Isa::neon: return &evaluate_batch_neon;
#endif
    default: return &evaluate_batch_scalar;
  }
}

void evaluate_batch(const EvalModel& model, const SequenceView& seq, const DurationBlock& block,
                    std::span<double> out) {
  if (out.size() < block.count) throw std::invalid_argument("output span shorter than block");
  switch (active_isa()) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::avx2: evaluate_batch_avx2(model, seq, block, out.data()); return;
#endif
#if defined(__aarch64__)
    case Isa::neon: evaluate_batch_neon(model, seq, block, out.data()); return;
#endif
    default: evaluate_batch_scalar(model, seq, block, out.data()); return;
  }
}

}  // namespace simheur::kernels
