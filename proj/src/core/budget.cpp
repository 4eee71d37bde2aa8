#include "simheur/core/budget.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "simheur/core/errors.hpp"

namespace simheur::core {

BudgetClock::BudgetClock(std::uint64_t total_budget, double det_eval_cost)
    : total_(total_budget), det_cost_(det_eval_cost) {
  if (total_budget == 0) throw std::invalid_argument("total_budget must be positive");
  if (!(det_eval_cost >= 0.0) || !std::isfinite(det_eval_cost))
    throw std::invalid_argument("det_eval_cost must be finite and nonnegative");
}

bool BudgetClock::can_charge_sim(std::uint64_t n) const noexcept {
  return fits(spent_after(sim_used_ + n, det_used_), static_cast<double>(total_));
}

bool BudgetClock::can_charge_det(std::uint64_t n) const noexcept {
  return fits(spent_after(sim_used_, det_used_ + n), static_cast<double>(total_));
}

void BudgetClock::charge_sim(std::uint64_t n) {
  if (!can_charge_sim(n))
    throw BudgetExhausted("simulation charge of " + std::to_string(n) + " exceeds budget");
  sim_used_ += n;
}

void BudgetClock::charge_det(std::uint64_t n) {
  if (!can_charge_det(n))
    throw BudgetExhausted("deterministic charge of " + std::to_string(n) + " exceeds budget");
  det_used_ += n;
}

double BudgetClock::remaining() const noexcept {
  const double r = static_cast<double>(total_) - spent();
  return r > 0.0 ? r : 0.0;
}

std::uint64_t BudgetClock::affordable_sim(double limit) const noexcept {
  if (limit > static_cast<double>(total_)) limit = static_cast<double>(total_);
  const double room = limit - spent();
  if (room < 0.0) return 0;
  auto n = static_cast<std::uint64_t>(std::floor(room + kTolerance * (1.0 + limit)));
  while (n > 0 && !fits(spent_after(sim_used_ + n, det_used_), limit)) --n;
  return n;
}

}  // namespace simheur::core
