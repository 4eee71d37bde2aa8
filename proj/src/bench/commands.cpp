#include "simheur/bench/commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "simheur/core/rng.hpp"
#include "simheur/sched/generator.hpp"
#include "simheur/sched/instance_io.hpp"
#include "simheur/sched/testbed.hpp"

namespace simheur::bench {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kInstanceTag = 0x696E7374616E6365ULL;  // "instance"

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  return os;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory " + dir.string() + ": " + ec.message());
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) noexcept {
  return core::stream_id_of({kInstanceTag, seed, index});
}

std::vector<fs::path> cmd_generate(const GenerateOptions& options, std::ostream& log) {
  if (options.count == 0) throw std::invalid_argument("count must be positive");
  ensure_dir(options.out_dir);
  std::vector<fs::path> paths;
  for (std::size_t k = 0; k < options.count; ++k) {
    const auto instance = sched::generate_instance(options.jobs, options.machines,
                                                   instance_seed(options.seed, k), options.params);
    const fs::path path = options.out_dir / fmt::format("instance_{:03}.yaml", k);
    sched::save_instance(instance, path);
    paths.push_back(path);
  }
  log << fmt::format("generated {} instances ({} jobs, {} machines) in {}\n", options.count, options.jobs,
                     options.machines, options.out_dir.string());
  return paths;
}

engine::RunResult cmd_run(const RunOptions& options, std::ostream& log) {
  const sched::SchedulingProblem problem(sched::load_instance(options.instance));
  auto result = engine::run(problem, options.config, options.seed);
  ensure_dir(options.out_dir);
  {
    auto os = open_out(options.out_dir / "trace.csv");
    result.trace.write_csv(os);
  }
  log << fmt::format("strategy={} budget={} estimate={} reps={} det_value={} spent={}\n",
                     engine::to_string(options.config.strategy), options.config.total_budget,
                     result.estimated_expected_objective, result.replications_on_best,
                     result.deterministic_value, result.budget_spent);
  return result;
}

std::vector<NamedInstance> load_instance_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".yaml") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no *.yaml instance files in " + dir.string());
  std::vector<NamedInstance> out;
  for (const auto& f : files) out.push_back({f.stem().string(), sched::load_instance(f)});
  return out;
}

std::vector<BenchmarkRow> cmd_bench(const BenchOptions& options, std::ostream& log) {
  const auto instances = load_instance_dir(options.instances_dir);
  const auto rows = run_benchmark(options.spec, instances);
  const auto agg = aggregate(rows, options.spec.strategies);
  ensure_dir(options.out_dir);
  {
    auto os = open_out(options.out_dir / "bench.csv");
    write_rows_csv(os, rows);
  }
  {
    auto os = open_out(options.out_dir / "bench_aggregate.csv");
    write_aggregate_csv(os, agg);
  }
  log << fmt::format("{:<24} {:>10} {:>6} {:>16}\n", "strategy", "budget", "runs", "mean_oracle");
  for (const auto& a : agg)
    log << fmt::format("{:<24} {:>10} {:>6} {:>16.4f}\n", engine::to_string(a.strategy), a.budget, a.runs,
                       a.mean_oracle_objective);
  return rows;
}

OracleReport cmd_oracle(const OracleOptions& options, std::ostream& log) {
  const auto instance = sched::load_instance(options.instance);
  auto report = run_oracle(instance, options.eval_reps, options.seed);
  ensure_dir(options.out_dir);
  {
    auto os = open_out(options.out_dir / "oracle.csv");
    os << "schedule,deterministic_objective,det_rank,expected_objective,se,stochastic_rank\n";
    for (const auto& e : report.entries)
      os << fmt::format("{},{},{},{},{},{}\n", sched::to_string(e.schedule), e.det_value, e.det_rank, e.stats.mean,
                        std::sqrt(e.stats.variance() / static_cast<double>(e.stats.n)), e.stochastic_rank);
  }
  const auto& det = report.entries[report.det_best];
  const auto& sto = report.entries[report.stochastic_best];
  log << fmt::format("schedules={}\n", report.entries.size());
  log << fmt::format("deterministic_best={} det_value={} expected={}\n", sched::to_string(det.schedule),
                     det.det_value, det.stats.mean);
  log << fmt::format("stochastic_best={} det_value={} expected={}\n", sched::to_string(sto.schedule),
                     sto.det_value, sto.stats.mean);
  log << fmt::format("rankings_agree={}\n", report.det_best == report.stochastic_best ? "yes" : "no");
  return report;
}

}  // namespace simheur::bench
