#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "simheur/engine/elite_set.hpp"
#include "simheur/search/annealing.hpp"

namespace simheur::engine {

enum class Strategy {
  dcop_only,               // search on means only; estimate the incumbent at the end
  fixed_interval,          // fixed search slices alternating with equal simulation of the elite
  simulate_all_promising,  // every promising candidate is simulated on discovery
  ocba_guided,             // simulate the elite only while its EOC exceeds the threshold
};

enum class ThresholdMode { absolute, relative };

std::string_view to_string(Strategy s) noexcept;
std::string_view to_string(ThresholdMode m) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;
std::optional<ThresholdMode> parse_threshold_mode(std::string_view name) noexcept;
std::string_view to_string(AdmissionRule r) noexcept;
std::optional<AdmissionRule> parse_admission_rule(std::string_view name) noexcept;

struct RunConfig {
  Strategy strategy = Strategy::ocba_guided;
  std::uint64_t total_budget = 10000;  // in simulation replications
  double det_eval_cost = 0.01;         // budget units per deterministic evaluation
  double finalize_fraction = 0.1;      // share of the budget reserved for the final selection

  std::uint64_t elite_capacity = 10;
  AdmissionRule admission = AdmissionRule::mixed;
  double eoc_threshold = 0.01;
  ThresholdMode threshold_mode = ThresholdMode::relative;
  std::uint64_t n0 = 5;           // replications before a solution gets a posterior
  std::uint64_t ocba_delta = 20;  // replications per allocation round
  // ocba-guided: simulation may use at most this share of what has been spent
  // while the search is running; past it the run goes back to searching.
  double search_sim_share = 0.5;
  std::uint64_t check_interval = 500;  // deterministic evaluations between periodic EOC checks
  std::uint64_t max_det_evaluations = 0;  // 0 = bounded by budget only; required when det_eval_cost == 0

  std::uint64_t interval_det_evals = 500;  // fixed-interval: search slice length
  std::uint64_t interval_reps = 20;        // fixed-interval: replications per slice
  std::uint64_t per_candidate_reps = 10;   // simulate-all-promising

  search::PromisingFilter promising{};
  search::AnnealingParams annealing{};

  unsigned threads = 1;  // replication workers; results do not depend on it

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

}  // namespace simheur::engine
