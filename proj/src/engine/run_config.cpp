#include "simheur/engine/run_config.hpp"

#include <cmath>
#include <stdexcept>

namespace simheur::engine {

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::dcop_only: return "dcop-only";
    case Strategy::fixed_interval: return "fixed-interval";
    case Strategy::simulate_all_promising: return "simulate-all-promising";
    case Strategy::ocba_guided: return "ocba-guided";
  }
  return "unknown";
}

std::string_view to_string(ThresholdMode m) noexcept {
  return m == ThresholdMode::absolute ? "absolute" : "relative";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
  for (Strategy s : {Strategy::dcop_only, Strategy::fixed_interval,
                     Strategy::simulate_all_promising, Strategy::ocba_guided})
    if (name == to_string(s)) return s;
  return std::nullopt;
}

std::optional<ThresholdMode> parse_threshold_mode(std::string_view name) noexcept {
  if (name == "absolute") return ThresholdMode::absolute;
  if (name == "relative" || name == "relative-to-best-mean") return ThresholdMode::relative;
  return std::nullopt;
}

std::string_view to_string(AdmissionRule r) noexcept {
  return r == AdmissionRule::mixed ? "mixed" : "gap-corrected";
}

std::optional<AdmissionRule> parse_admission_rule(std::string_view name) noexcept {
  if (name == "mixed") return AdmissionRule::mixed;
  if (name == "gap-corrected") return AdmissionRule::gap_corrected;
  return std::nullopt;
}

void RunConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid run config: ") + what);
  };
  require(total_budget > 0, "total_budget must be positive");
  require(std::isfinite(det_eval_cost) && det_eval_cost >= 0.0, "det_eval_cost must be >= 0");
  require(det_eval_cost > 0.0 || max_det_evaluations > 0,
          "max_det_evaluations must be set when det_eval_cost is 0");
  require(finalize_fraction > 0.0 && finalize_fraction < 1.0, "finalize_fraction must be in (0, 1)");
  require(elite_capacity > 0, "elite_capacity must be positive");
  require(eoc_threshold > 0.0, "eoc_threshold must be positive");
  require(n0 > 0, "n0 must be positive");
  require(ocba_delta > 0, "ocba_delta must be positive");
  require(check_interval > 0, "check_interval must be positive");
  require(search_sim_share > 0.0 && search_sim_share <= 1.0, "search_sim_share must be in (0, 1]");
  require(interval_det_evals > 0, "interval_det_evals must be positive");
  require(interval_reps > 0, "interval_reps must be positive");
  require(per_candidate_reps > 0, "per_candidate_reps must be positive");
  require(promising.relative_gap >= 0.0, "promising relative_gap must be >= 0");
  require(annealing.cooling > 0.0 && annealing.cooling <= 1.0, "cooling must be in (0, 1]");
  require(annealing.initial_temperature_fraction > 0.0, "initial temperature fraction must be positive");
  require(annealing.stagnation_limit > 0, "stagnation_limit must be positive");
  require(threads > 0, "threads must be positive");
}

}  // namespace simheur::engine
