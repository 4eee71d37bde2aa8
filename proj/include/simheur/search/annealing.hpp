#pragma once

#include <cstdint>
#include <functional>
#include <limits>

#include "simheur/core/rng.hpp"
#include "simheur/sched/instance.hpp"
#include "simheur/sched/schedule.hpp"

namespace simheur::search {

/// Simulated annealing on the deterministic (mean-duration) objective with
/// geometric cooling and a reheat to the start temperature after a run of
/// non-improving steps.
struct AnnealingParams {
  double initial_temperature_fraction = 0.1;  // T0 as a fraction of the initial objective
  double cooling = 0.999;
  std::uint64_t stagnation_limit = 2000;
};

struct SearchState {
  sched::Schedule current;
  double current_value = 0.0;
  sched::Schedule best;
  double best_value = 0.0;
  double temperature = 1.0;
  double initial_temperature = 1.0;
  std::uint64_t iterations = 0;
  std::uint64_t since_improvement = 0;
};

/// Candidates within `relative_gap` of the best deterministic value seen so far
/// count as promising.
struct PromisingFilter {
  double relative_gap = 0.02;

  bool promising(double value, double best_value) const noexcept {
    if (relative_gap == std::numeric_limits<double>::infinity()) return true;
    return value <= (1.0 + relative_gap) * best_value;
  }
};

struct StepOutcome {
  bool accepted = false;
  double value = 0.0;     // deterministic objective of the proposal
  bool new_best = false;  // proposal became the incumbent (ties included)
};

SearchState start_search(const sched::Instance& instance, const sched::Schedule& start,
                         const AnnealingParams& params = {});

/// exp(-delta / temperature) for delta > 0, else 1.
double acceptance_probability(double delta, double temperature) noexcept;

/// One Metropolis step. Moves with delta <= 0 are always accepted. Does not
/// touch any budget; the caller charges one deterministic evaluation per call.
StepOutcome step(SearchState& state, const sched::Instance& instance, core::RngStream& stream,
                 const AnnealingParams& params = {});

using StopPredicate = std::function<bool()>;
using PromisingCallback = std::function<void(const sched::Schedule&, double)>;

/// Steps until `stop()` returns true (checked before every step) and reports
/// each accepted proposal that passes `filter`, in step order.
void run_until(SearchState& state, const sched::Instance& instance, core::RngStream& stream,
               const StopPredicate& stop, const PromisingCallback& on_promising,
               const PromisingFilter& filter = {}, const AnnealingParams& params = {});

}  // namespace simheur::search
