#include "simheur/bench/benchmark.hpp"

#include <fmt/format.h>

#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "simheur/bench/oracle.hpp"
#include "simheur/core/rng.hpp"
#include "simheur/engine/engine.hpp"
#include "simheur/sched/testbed.hpp"

namespace simheur::bench {

namespace {
constexpr std::uint64_t kCellTag = 0x62656E63685F6365ULL;  // "bench_ce"
constexpr std::uint64_t kEvalTag = 0x62656E63685F6576ULL;  // "bench_ev"
}  // namespace

void BenchmarkSpec::validate() const {
  if (budgets.empty()) throw std::invalid_argument("benchmark needs at least one budget");
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (budgets[i] == 0) throw std::invalid_argument("budgets must be positive");
    if (i > 0 && budgets[i] <= budgets[i - 1])
      throw std::invalid_argument("budget grid must be strictly increasing");
  }
  if (strategies.empty()) throw std::invalid_argument("benchmark needs at least one strategy");
  if (replications_per_cell == 0) throw std::invalid_argument("replications_per_cell must be positive");
  if (eval_reps == 0) throw std::invalid_argument("eval_reps must be positive");
  if (cell_threads == 0) throw std::invalid_argument("cell_threads must be positive");
}

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t instance_index, engine::Strategy strategy,
                        std::uint64_t budget, std::uint64_t rep) noexcept {
  return core::stream_id_of(
      {kCellTag, master_seed, instance_index, static_cast<std::uint64_t>(strategy), budget, rep});
}

std::uint64_t evaluation_seed(std::uint64_t master_seed, std::size_t instance_index) noexcept {
  return core::stream_id_of({kEvalTag, master_seed, instance_index});
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkSpec& spec, const std::vector<NamedInstance>& instances) {
  spec.validate();

  struct Cell {
    std::size_t instance;
    engine::Strategy strategy;
    std::uint64_t budget;
    std::uint64_t rep;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (auto strategy : spec.strategies)
      for (auto budget : spec.budgets)
        for (std::uint64_t rep = 0; rep < spec.replications_per_cell; ++rep)
          cells.push_back({i, strategy, budget, rep});

  std::vector<sched::SchedulingProblem> problems;
  problems.reserve(instances.size());
  for (const auto& ni : instances) problems.emplace_back(ni.instance);

  std::vector<BenchmarkRow> rows(cells.size());
  auto run_cell = [&](std::size_t c) {
    const Cell& cell = cells[c];
    engine::RunConfig cfg = spec.base;
    cfg.strategy = cell.strategy;
    cfg.total_budget = cell.budget;
    const auto seed = cell_seed(spec.master_seed, cell.instance, cell.strategy, cell.budget, cell.rep);
    const auto result = engine::run(problems[cell.instance], cfg, seed);
    const auto est = crn_estimate(instances[cell.instance].instance, {result.best_schedule}, spec.eval_reps,
                                  evaluation_seed(spec.master_seed, cell.instance));
    BenchmarkRow& row = rows[c];
    row.instance_id = instances[cell.instance].id;
    row.strategy = cell.strategy;
    row.budget = cell.budget;
    row.run_seed = seed;
    row.returned_objective_estimate = result.estimated_expected_objective;
    row.oracle_objective_estimate = est[0].mean;
    row.oracle_se = std::sqrt(est[0].variance() / static_cast<double>(est[0].n));
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(spec.cell_threads, static_cast<unsigned>(cells.size())));
  if (workers <= 1) {
    for (std::size_t c = 0; c < cells.size(); ++c) run_cell(c);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c = next++; c < cells.size(); c = next++) run_cell(c);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::vector<AggregateRow> aggregate(const std::vector<BenchmarkRow>& rows,
                                    const std::vector<engine::Strategy>& strategy_order) {
  std::vector<std::uint64_t> budgets;
  for (const auto& r : rows)
    if (std::find(budgets.begin(), budgets.end(), r.budget) == budgets.end()) budgets.push_back(r.budget);
  std::sort(budgets.begin(), budgets.end());

  std::vector<AggregateRow> out;
  for (auto strategy : strategy_order)
    for (auto budget : budgets) {
      AggregateRow a;
      a.strategy = strategy;
      a.budget = budget;
      for (const auto& r : rows) {
        if (r.strategy != strategy || r.budget != budget) continue;
        ++a.runs;
        a.mean_oracle_objective += r.oracle_objective_estimate;
        a.mean_returned_estimate += r.returned_objective_estimate;
      }
      if (a.runs == 0) continue;
      a.mean_oracle_objective /= static_cast<double>(a.runs);
      a.mean_returned_estimate /= static_cast<double>(a.runs);
      out.push_back(a);
    }
  return out;
}

void write_rows_csv(std::ostream& os, const std::vector<BenchmarkRow>& rows) {
  os << "instance_id,strategy,budget,run_seed,returned_objective_estimate,oracle_objective_estimate,oracle_se\n";
  for (const auto& r : rows)
    os << fmt::format("{},{},{},{},{},{},{}\n", r.instance_id, engine::to_string(r.strategy), r.budget,
                      r.run_seed, r.returned_objective_estimate, r.oracle_objective_estimate, r.oracle_se);
}

void write_aggregate_csv(std::ostream& os, const std::vector<AggregateRow>& rows) {
  os << "strategy,budget,runs,mean_oracle_objective,mean_returned_estimate\n";
  for (const auto& a : rows)
    os << fmt::format("{},{},{},{},{}\n", engine::to_string(a.strategy), a.budget, a.runs,
                      a.mean_oracle_objective, a.mean_returned_estimate);
}

}  // namespace simheur::bench
