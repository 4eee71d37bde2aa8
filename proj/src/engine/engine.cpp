#include "simheur/engine/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simheur/core/rng.hpp"
#include "simheur/search/annealing.hpp"
#include "simheur/search/moves.hpp"
#include "simheur/stats/belief.hpp"
#include "simheur/stats/ocba.hpp"

namespace simheur::engine {

namespace {

constexpr std::uint64_t kSearchTag = 0x7365617263685F73ULL;  // "search_s"

using Fields = std::vector<RunTrace::Field>;

std::string num(double v) { return format_number(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }

void record(RunTrace& trace, const core::BudgetClock& clock, EventKind kind, Fields fields) {
  fields.emplace_back("sim", num(clock.sim_replications_used()));
  fields.emplace_back("det", num(clock.det_evaluations_used()));
  trace.record(clock.spent(), kind, std::move(fields));
}

// Raises every entry to n0 replications without passing `limit`. False if it
// could not finish.
bool top_up(EliteSet& elite, core::BudgetClock& clock, const Replicator& replicator, double limit) {
  for (std::size_t i = 0; i < elite.size(); ++i) {
    const auto n = elite.entries()[i].stats.n;
    if (n >= elite.n0()) continue;
    const std::uint64_t need = elite.n0() - n;
    const std::uint64_t take = std::min(need, clock.affordable_sim(limit));
    if (take > 0) simulate_entry(elite, i, take, clock, replicator);
    if (take < need) return false;
  }
  return true;
}

void run_ocba_round(EliteSet& elite, core::BudgetClock& clock, const Replicator& replicator,
                    std::uint64_t grant, RunTrace& trace) {
  std::vector<std::size_t> idx;
  const auto beliefs = elite.beliefs(&idx);
  if (beliefs.size() >= 2) {
    const auto alloc = stats::ocba_allocate(beliefs, grant);
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (alloc.additional_reps[k] > 0) simulate_entry(elite, idx[k], alloc.additional_reps[k], clock, replicator);
    record(trace, clock, EventKind::ocba_round,
           {{"rule", alloc.degenerate ? "equal" : "ocba"}, {"reps", num(grant)}, {"elite", num(elite.size())}});
  } else {
    simulate_entry(elite, idx.empty() ? 0 : idx.front(), grant, clock, replicator);
    record(trace, clock, EventKind::ocba_round,
           {{"rule", "single"}, {"reps", num(grant)}, {"elite", num(elite.size())}});
  }
}

void run_equal_round(EliteSet& elite, core::BudgetClock& clock, const Replicator& replicator,
                     std::uint64_t grant, RunTrace& trace) {
  const std::vector<double> weights(elite.size(), 1.0);
  const auto split = stats::apportion(weights, grant);
  for (std::size_t i = 0; i < elite.size(); ++i)
    if (split[i] > 0) simulate_entry(elite, i, split[i], clock, replicator);
  record(trace, clock, EventKind::ocba_round,
         {{"rule", "equal"}, {"reps", num(grant)}, {"elite", num(elite.size())}});
}

class Runner {
 public:
  Runner(const sched::SchedulingProblem& problem, const RunConfig& config, std::uint64_t seed)
      : problem_(problem),
        instance_(problem.instance()),
        cfg_(config),
        clock_(config.total_budget, config.det_eval_cost),
        replicator_(problem, seed, config.threads),
        elite_(config.elite_capacity, config.n0, config.admission),
        stream_(core::substream(seed, core::stream_id_of({kSearchTag}))),
        search_limit_((1.0 - config.finalize_fraction) * static_cast<double>(config.total_budget)) {}

  RunResult execute() {
    state_ = search::start_search(instance_, search::initial_solution(instance_), cfg_.annealing);
    if (clock_.can_charge_det(1)) clock_.charge_det(1);

    switch (cfg_.strategy) {
      case Strategy::dcop_only: search_dcop_only(); break;
      case Strategy::fixed_interval: search_fixed_interval(); break;
      case Strategy::simulate_all_promising: search_simulate_all(); break;
      case Strategy::ocba_guided: search_ocba_guided(); break;
    }
    finalize();
    return result();
  }

 private:
  // Charges one deterministic evaluation if the search phase still has room.
  bool take_step() {
    if (!searching_) return false;
    if (cfg_.max_det_evaluations > 0 && clock_.det_evaluations_used() >= cfg_.max_det_evaluations) return false;
    const double after = clock_.spent() + cfg_.det_eval_cost;
    if (!clock_.fits(after, search_limit_) || !clock_.can_charge_det(1)) return false;
    clock_.charge_det(1);
    return true;
  }

  void run_search(const search::PromisingCallback& on_promising, const std::function<void()>& before_step) {
    search::run_until(
        state_, instance_, stream_,
        [&] {
          if (before_step) before_step();
          return !take_step();
        },
        on_promising, cfg_.promising, cfg_.annealing);
  }

  void admit_traced(const sched::Schedule& s, double det_value, const stats::SampleStats& st = {},
                    std::optional<std::uint64_t> serial = std::nullopt) {
    const AdmitResult r = elite_.admit(s, det_value, st, serial);
    last_admitted_ = r.inserted;
    if (!r.inserted) return;
    Fields f{{"det_value", num(det_value)},
             {"serial", num(elite_.entries().back().serial)},
             {"elite", num(elite_.size())}};
    if (r.evicted_serial) f.emplace_back("evicted", num(*r.evicted_serial));
    record(trace_, clock_, EventKind::candidate_admitted, std::move(f));
  }

  void confirm() {
    const double share = cfg_.search_sim_share;
    const double det_spent = cfg_.det_eval_cost * static_cast<double>(clock_.det_evaluations_used());
    const double cap = share >= 1.0 ? search_limit_ : std::min(search_limit_, det_spent / (1.0 - share));
    const auto outcome = ensure_confident(elite_, clock_, replicator_, cfg_, trace_, cap);
    if (outcome.exhausted && cap < search_limit_) {
      if (outcome.rounds > 0) record(trace_, clock_, EventKind::phase_switch, {{"to", "search"}, {"budget_exhausted", "1"}, {"cap", "search_sim_share"}});
      return;
    }
    if (outcome.exhausted) {
      searching_ = false;
      exhausted_ = true;
    }
  }

  void search_dcop_only() { run_search(nullptr, nullptr); }

  void search_ocba_guided() {
    admit_traced(state_.current, state_.current_value);
    confirm();
    std::uint64_t since_check = 0;
    run_search(
        [&](const sched::Schedule& s, double v) {
          admit_traced(s, v);
          if (last_admitted_) {
            since_check = 0;
            confirm();
          }
        },
        [&] {
          if (searching_ && ++since_check > cfg_.check_interval) {
            since_check = 0;
            confirm();
          }
        });
  }

  void search_fixed_interval() {
    admit_traced(state_.current, state_.current_value);
    std::uint64_t since_slice = 0;
    run_search([&](const sched::Schedule& s, double v) { admit_traced(s, v); },
               [&] {
                 if (!searching_ || ++since_slice <= cfg_.interval_det_evals) return;
                 since_slice = 0;
                 const std::uint64_t grant = std::min(cfg_.interval_reps, clock_.affordable_sim(search_limit_));
                 if (grant > 0) run_equal_round(elite_, clock_, replicator_, grant, trace_);
                 if (grant < cfg_.interval_reps) {
                   searching_ = false;
                   exhausted_ = true;
                 }
               });
  }

  void search_simulate_all() {
    auto on_candidate = [&](const sched::Schedule& s, double v) {
      if (!searching_ || elite_.contains(s)) return;
      const std::uint64_t afford = clock_.affordable_sim(search_limit_);
      if (afford < cfg_.per_candidate_reps) {
        searching_ = false;
        exhausted_ = true;
        return;
      }
      const std::uint64_t serial = elite_.next_serial();
      clock_.charge_sim(cfg_.per_candidate_reps);
      stats::SampleStats st;
      stats::accumulate(st, replicator_.run(s, serial, 0, cfg_.per_candidate_reps));
      admit_traced(s, v, st, serial);
    };
    on_candidate(state_.current, state_.current_value);
    run_search(on_candidate, nullptr);
  }

  void finalize() {
    record(trace_, clock_, EventKind::finalize_started,
           {{"reserve", num(clock_.remaining())}, {"exhausted", exhausted_ ? "1" : "0"}});
    if (cfg_.strategy == Strategy::dcop_only || elite_.empty()) {
      admit_traced(state_.best, state_.best_value);
      const auto idx = *elite_.find(state_.best);
      const std::uint64_t grant = clock_.affordable_sim();
      if (grant > 0) {
        simulate_entry(elite_, idx, grant, clock_, replicator_);
        record(trace_, clock_, EventKind::ocba_round,
               {{"rule", "single"}, {"reps", num(grant)}, {"elite", num(elite_.size())}});
      }
      incumbent_index_ = idx;
      return;
    }

    const double total = static_cast<double>(clock_.total_budget());
    top_up(elite_, clock_, replicator_, total);
    const bool use_ocba = cfg_.strategy == Strategy::ocba_guided;
    for (std::uint64_t afford = clock_.affordable_sim(); afford > 0; afford = clock_.affordable_sim()) {
      const std::uint64_t grant = std::min(cfg_.ocba_delta, afford);
      if (use_ocba)
        run_ocba_round(elite_, clock_, replicator_, grant, trace_);
      else
        run_equal_round(elite_, clock_, replicator_, grant, trace_);
    }
  }

  RunResult result() {
    std::size_t pick = 0;
    if (incumbent_index_) {
      pick = *incumbent_index_;
    } else {
      std::vector<std::size_t> idx;
      const auto beliefs = elite_.beliefs(&idx);
      if (!beliefs.empty()) {
        pick = idx[stats::select_best(beliefs)];
      } else {
        // Budget too small for n0 replications anywhere: fall back to the best deterministic value.
        for (std::size_t i = 1; i < elite_.size(); ++i)
          if (elite_.entries()[i].det_value < elite_.entries()[pick].det_value) pick = i;
      }
    }
    const EliteEntry& chosen = elite_.entries()[pick];

    RunResult r;
    r.best_schedule = chosen.schedule;
    r.estimated_expected_objective = chosen.stats.n > 0 ? chosen.stats.mean : chosen.det_value;
    r.replications_on_best = chosen.stats.n;
    r.deterministic_value = chosen.det_value;
    record(trace_, clock_, EventKind::returned,
           {{"strategy", std::string(to_string(cfg_.strategy))},
            {"serial", num(chosen.serial)},
            {"estimate", num(r.estimated_expected_objective)},
            {"reps", num(chosen.stats.n)},
            {"det_value", num(chosen.det_value)}});
    r.trace = std::move(trace_);
    r.final_elite = elite_.entries();
    r.budget_spent = clock_.spent();
    r.sim_replications = clock_.sim_replications_used();
    r.det_evaluations = clock_.det_evaluations_used();
    return r;
  }

  const sched::SchedulingProblem& problem_;
  const sched::Instance& instance_;
  const RunConfig& cfg_;
  core::BudgetClock clock_;
  Replicator replicator_;
  EliteSet elite_;
  RunTrace trace_;
  core::RngStream stream_;
  search::SearchState state_;
  double search_limit_;
  bool searching_ = true;
  bool exhausted_ = false;
  bool last_admitted_ = false;
  std::optional<std::size_t> incumbent_index_;
};

}  // namespace

double effective_threshold(const RunConfig& config, double best_mean) noexcept {
  return config.threshold_mode == ThresholdMode::absolute ? config.eoc_threshold
                                                          : config.eoc_threshold * std::abs(best_mean);
}

void simulate_entry(EliteSet& elite, std::size_t index, std::uint64_t count, core::BudgetClock& clock,
                    const Replicator& replicator) {
  clock.charge_sim(count);
  EliteEntry& e = elite.entry(index);
  stats::accumulate(e.stats, replicator.run(e.schedule, e.serial, e.stats.n, count));
}

ConfidenceOutcome ensure_confident(EliteSet& elite, core::BudgetClock& clock, const Replicator& replicator,
                                   const RunConfig& config, RunTrace& trace, double limit) {
  ConfidenceOutcome out;
  if (elite.empty()) return out;
  if (!top_up(elite, clock, replicator, limit)) {
    out.exhausted = true;
    return out;
  }

  bool simulating = false;
  while (true) {
    std::vector<std::size_t> idx;
    const auto beliefs = elite.beliefs(&idx);
    const std::size_t best = stats::select_best(beliefs);
    out.eoc = stats::eoc_bonferroni(beliefs);
    out.threshold = effective_threshold(config, beliefs[best].posterior_mean);
    record(trace, clock, EventKind::eoc_checked,
           {{"eoc", num(out.eoc)},
            {"threshold", num(out.threshold)},
            {"best_serial", num(elite.entries()[idx[best]].serial)},
            {"elite", num(elite.size())}});
    if (out.eoc <= out.threshold) {
      if (simulating) record(trace, clock, EventKind::phase_switch, {{"to", "search"}});
      return out;
    }
    const std::uint64_t grant = std::min(config.ocba_delta, clock.affordable_sim(limit));
    if (grant == 0) {
      out.exhausted = true;
      return out;
    }
    if (!simulating) {
      record(trace, clock, EventKind::phase_switch, {{"to", "simulation"}});
      simulating = true;
    }
    run_ocba_round(elite, clock, replicator, grant, trace);
    ++out.rounds;
  }
}

RunResult run(const sched::SchedulingProblem& problem, const RunConfig& config, std::uint64_t seed) {
  config.validate();
  Runner runner(problem, config, seed);
  return runner.execute();
}

}  // namespace simheur::engine
