#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "simheur/engine/run_config.hpp"
#include "simheur/sched/instance.hpp"

namespace simheur::bench {

struct NamedInstance {
  std::string id;
  sched::Instance instance;
};

struct BenchmarkSpec {
  std::vector<std::uint64_t> budgets;  // strictly increasing
  std::vector<engine::Strategy> strategies;
  std::uint64_t replications_per_cell = 1;
  std::uint64_t eval_reps = 10000;
  std::uint64_t master_seed = 1;
  engine::RunConfig base;  // strategy and total_budget are overwritten per cell
  unsigned cell_threads = 1;

  void validate() const;
};

struct BenchmarkRow {
  std::string instance_id;
  engine::Strategy strategy = engine::Strategy::ocba_guided;
  std::uint64_t budget = 0;
  std::uint64_t run_seed = 0;
  double returned_objective_estimate = 0.0;
  double oracle_objective_estimate = 0.0;
  double oracle_se = 0.0;
};

struct AggregateRow {
  engine::Strategy strategy = engine::Strategy::ocba_guided;
  std::uint64_t budget = 0;
  std::uint64_t runs = 0;
  double mean_oracle_objective = 0.0;
  double mean_returned_estimate = 0.0;
};

/// Seed of one grid cell, derived only from its coordinates.
std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t instance_index, engine::Strategy strategy,
                        std::uint64_t budget, std::uint64_t rep) noexcept;
/// Seed of the common-random-number evaluation stream for one instance.
std::uint64_t evaluation_seed(std::uint64_t master_seed, std::size_t instance_index) noexcept;

/// Runs every (instance, strategy, budget, rep) cell and evaluates each
/// returned schedule with eval_reps fresh replications outside the run
/// budget. Rows come back in grid order regardless of cell_threads.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkSpec& spec, const std::vector<NamedInstance>& instances);

/// Mean per (strategy, budget), ordered by strategy as listed, then budget.
std::vector<AggregateRow> aggregate(const std::vector<BenchmarkRow>& rows,
                                    const std::vector<engine::Strategy>& strategy_order);

void write_rows_csv(std::ostream& os, const std::vector<BenchmarkRow>& rows);
void write_aggregate_csv(std::ostream& os, const std::vector<AggregateRow>& rows);

}  // namespace simheur::bench
