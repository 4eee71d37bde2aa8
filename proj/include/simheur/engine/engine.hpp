#pragma once

#include <cstdint>
#include <vector>

#include "simheur/core/budget.hpp"
#include "simheur/engine/elite_set.hpp"
#include "simheur/engine/replicator.hpp"
#include "simheur/engine/run_config.hpp"
#include "simheur/engine/trace.hpp"
#include "simheur/sched/testbed.hpp"

namespace simheur::engine {

struct RunResult {
  sched::Schedule best_schedule;
  double estimated_expected_objective = 0.0;
  std::uint64_t replications_on_best = 0;
  double deterministic_value = 0.0;
  RunTrace trace;
  std::vector<EliteEntry> final_elite;

  double budget_spent = 0.0;
  std::uint64_t sim_replications = 0;
  std::uint64_t det_evaluations = 0;
};

struct ConfidenceOutcome {
  double eoc = 0.0;
  double threshold = 0.0;
  std::uint64_t rounds = 0;
  bool exhausted = false;  // stopped because `limit` left no room for more replications
};

/// eoc_threshold in absolute mode, eoc_threshold * |best_mean| in relative mode.
double effective_threshold(const RunConfig& config, double best_mean) noexcept;

/// Simulates `count` more replications of elite entry `index`, charging the clock.
void simulate_entry(EliteSet& elite, std::size_t index, std::uint64_t count,
                    core::BudgetClock& clock, const Replicator& replicator);

/// Brings every elite entry to n0 replications, then runs OCBA rounds of
/// config.ocba_delta replications until the elite's expected opportunity cost
/// is at most the effective threshold. Never lets the clock pass `limit`
/// budget units; running out is reported through `exhausted`, not thrown.
ConfidenceOutcome ensure_confident(EliteSet& elite, core::BudgetClock& clock,
                                   const Replicator& replicator, const RunConfig& config,
                                   RunTrace& trace, double limit);

/// One complete run of `config.strategy` on `problem`. Deterministic in
/// (problem, config, seed) and independent of config.threads.
RunResult run(const sched::SchedulingProblem& problem, const RunConfig& config, std::uint64_t seed);

}  // namespace simheur::engine
