#include "simheur/search/annealing.hpp"

#include <algorithm>
#include <cmath>

#include "simheur/search/moves.hpp"
#include "simheur/sched/testbed.hpp"

namespace simheur::search {

namespace {

Move inverse(const Move& m) {
  switch (m.kind) {
    case MoveKind::swap: return m;
    case MoveKind::reinsert: return {MoveKind::reinsert, m.machine, m.to, 0, m.from};
    case MoveKind::transfer: return {MoveKind::transfer, m.to_machine, m.to, m.machine, m.from};
  }
  return m;
}

}  // namespace

SearchState start_search(const sched::Instance& instance, const sched::Schedule& start,
                         const AnnealingParams& params) {
  SearchState s;
  s.current = start;
  s.current_value = sched::deterministic_objective(instance, start);
  s.best = start;
  s.best_value = s.current_value;
  s.initial_temperature = std::max(params.initial_temperature_fraction * std::abs(s.current_value), 1e-9);
  s.temperature = s.initial_temperature;
  return s;
}

double acceptance_probability(double delta, double temperature) noexcept {
  if (delta <= 0.0) return 1.0;
  return std::exp(-delta / temperature);
}

StepOutcome step(SearchState& state, const sched::Instance& instance, core::RngStream& stream,
                 const AnnealingParams& params) {
  StepOutcome out;
  ++state.iterations;
  ++state.since_improvement;

  Move move;
  if (random_move(state.current, stream, move)) {
    apply(state.current, move);
    out.value = sched::evaluate_unchecked(instance, state.current, instance.mean_durations());
    const double delta = out.value - state.current_value;
    out.accepted = delta <= 0.0 || stream.uniform01() < acceptance_probability(delta, state.temperature);
    if (out.accepted) {
      state.current_value = out.value;
      if (out.value <= state.best_value) {
        if (out.value < state.best_value) state.since_improvement = 0;
        state.best = state.current;
        state.best_value = out.value;
        out.new_best = true;
      }
    } else {
      apply(state.current, inverse(move));
    }
  } else {
    out.value = state.current_value;
  }

  state.temperature *= params.cooling;
  if (state.since_improvement >= params.stagnation_limit) {
    state.temperature = state.initial_temperature;
    state.since_improvement = 0;
  }
  return out;
}

void run_until(SearchState& state, const sched::Instance& instance, core::RngStream& stream,
               const StopPredicate& stop, const PromisingCallback& on_promising,
               const PromisingFilter& filter, const AnnealingParams& params) {
  while (!stop()) {
    const StepOutcome o = step(state, instance, stream, params);
    if (o.accepted && on_promising && filter.promising(o.value, state.best_value))
      on_promising(state.current, o.value);
  }
}

}  // namespace simheur::search
