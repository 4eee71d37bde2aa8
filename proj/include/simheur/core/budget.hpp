#pragma once

#include <cstdint>

namespace simheur::core {

/// Replication-count budget shared by simulation and deterministic search.
///
/// One budget unit is one simulation replication; a deterministic evaluation
/// costs `det_eval_cost` units. Spent budget is always recomputed from the two
/// counters so it cannot drift from them.
class BudgetClock {
 public:
  static constexpr double kTolerance = 1e-9;

  BudgetClock(std::uint64_t total_budget, double det_eval_cost);

  /// Throws BudgetExhausted if `n` replications do not fit.
  void charge_sim(std::uint64_t n);
  /// Throws BudgetExhausted if `n` deterministic evaluations do not fit.
  void charge_det(std::uint64_t n);

  bool can_charge_sim(std::uint64_t n) const noexcept;
  bool can_charge_det(std::uint64_t n) const noexcept;

  double spent() const noexcept { return spent_after(sim_used_, det_used_); }
  double remaining() const noexcept;
  /// Whole replications that still fit, optionally capped below `limit` units.
  std::uint64_t affordable_sim(double limit) const noexcept;
  std::uint64_t affordable_sim() const noexcept { return affordable_sim(static_cast<double>(total_)); }

  std::uint64_t sim_replications_used() const noexcept { return sim_used_; }
  std::uint64_t det_evaluations_used() const noexcept { return det_used_; }
  std::uint64_t total_budget() const noexcept { return total_; }
  double det_eval_cost() const noexcept { return det_cost_; }

  bool fits(double spent_value, double limit) const noexcept {
    return spent_value <= limit + kTolerance * (1.0 + limit);
  }

 private:
  double spent_after(std::uint64_t sim, std::uint64_t det) const noexcept {
    return static_cast<double>(sim) + det_cost_ * static_cast<double>(det);
  }

  std::uint64_t total_;
  double det_cost_;
  std::uint64_t sim_used_ = 0;
  std::uint64_t det_used_ = 0;
};

}  // namespace simheur::core
