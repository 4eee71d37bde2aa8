// simheur: command-line front end (generate | run | bench | oracle).
//
// Exit codes: 0 success, 2 usage error, 1 runtime error.

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "simheur/bench/commands.hpp"
#include "simheur/bench/config_io.hpp"
#include "simheur/core/errors.hpp"
#include "simheur/kernels/batch_eval.hpp"

namespace {

namespace bench = simheur::bench;
namespace engine = simheur::engine;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

engine::Strategy strategy_or_throw(const std::string& name) {
  const auto s = engine::parse_strategy(name);
  if (!s) throw UsageError("unknown strategy '" + name +
                           "' (expected dcop-only, fixed-interval, simulate-all-promising, ocba-guided)");
  return *s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simheuristic optimization for stochastic parallel-machine scheduling"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  std::string config_path;
  std::string out_dir = ".";
  bool verbose = false;
  std::string isa;
  app.add_option("--seed", seed, "Master random seed");
  app.add_option("--config", config_path, "YAML file mirroring the run configuration");
  app.add_option("--out-dir", out_dir, "Directory for output files");
  app.add_flag("-v,--verbose", verbose, "Debug logging");
  app.add_option("--isa", isa, "Force evaluation kernel: scalar, avx2 or neon");

  // generate
  auto* gen = app.add_subcommand("generate", "Write synthetic instance files");
  bench::GenerateOptions gopt;
  std::optional<double> g_cv, g_tf, g_rdd;
  gen->add_option("--count", gopt.count, "Number of instances")->capture_default_str();
  gen->add_option("--jobs", gopt.jobs, "Jobs per instance")->capture_default_str();
  gen->add_option("--machines", gopt.machines, "Machines per instance")->capture_default_str();
  gen->add_option("--cv", g_cv, "Coefficient of variation of every duration");
  gen->add_option("--tf", g_tf, "Tardiness factor");
  gen->add_option("--rdd", g_rdd, "Due-date range");

  // run
  auto* run = app.add_subcommand("run", "Run one strategy on one instance");
  std::string r_instance;
  std::optional<std::string> r_strategy;
  std::optional<std::uint64_t> r_budget;
  std::optional<unsigned> r_threads;
  run->add_option("--instance", r_instance, "Instance file")->required();
  run->add_option("--strategy", r_strategy, "dcop-only | fixed-interval | simulate-all-promising | ocba-guided");
  run->add_option("--budget", r_budget, "Total budget in replications");
  run->add_option("--threads", r_threads, "Replication worker threads");

  // bench
  auto* bch = app.add_subcommand("bench", "Benchmark strategies over a budget grid");
  std::string b_instances;
  std::vector<std::uint64_t> b_budgets{1000, 10000, 100000};
  std::vector<std::string> b_strategies{"dcop-only", "fixed-interval", "simulate-all-promising", "ocba-guided"};
  std::uint64_t b_reps = 1, b_eval_reps = 10000;
  unsigned b_jobs = 1;
  std::optional<unsigned> b_threads;
  bch->add_option("--instances", b_instances, "Directory of instance files")->required();
  bch->add_option("--budgets", b_budgets, "Budget grid (strictly increasing)")->capture_default_str();
  bch->add_option("--strategies", b_strategies, "Strategies to compare")->capture_default_str();
  bch->add_option("--reps", b_reps, "Independent runs per cell")->capture_default_str();
  bch->add_option("--eval-reps", b_eval_reps, "Replications to evaluate each returned schedule")->capture_default_str();
  bch->add_option("--jobs", b_jobs, "Grid cells run in parallel")->capture_default_str();
  bch->add_option("--threads", b_threads, "Replication worker threads per run");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Enumerate all schedules of a tiny instance");
  bench::OracleOptions oopt;
  std::string o_instance;
  orc->add_option("--instance", o_instance, "Instance file (at most 8 jobs on 2 machines)")->required();
  orc->add_option("--eval-reps", oopt.eval_reps, "Common-random-number replications")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::warn);

  try {
    if (!isa.empty()) {
      bool matched = false;
      for (auto k : {simheur::kernels::Isa::scalar, simheur::kernels::Isa::avx2, simheur::kernels::Isa::neon})
        if (isa == simheur::kernels::to_string(k)) {
          simheur::kernels::set_active_isa(k);
          matched = true;
        }
      if (!matched) throw UsageError("unknown --isa '" + isa + "'");
    }

    bench::ConfigFile cfg;
    if (!config_path.empty()) cfg = bench::load_config(config_path);

    if (*gen) {
      gopt.seed = seed;
      gopt.out_dir = out_dir;
      gopt.params = cfg.generator;
      if (g_cv) gopt.params.cv = *g_cv;
      if (g_tf) gopt.params.tardiness_factor = *g_tf;
      if (g_rdd) gopt.params.due_date_range = *g_rdd;
      bench::cmd_generate(gopt, std::cout);
    } else if (*run) {
      bench::RunOptions ropt;
      ropt.instance = r_instance;
      ropt.config = cfg.run;
      if (r_strategy) ropt.config.strategy = strategy_or_throw(*r_strategy);
      if (r_budget) ropt.config.total_budget = *r_budget;
      if (r_threads) ropt.config.threads = *r_threads;
      ropt.seed = seed;
      ropt.out_dir = out_dir;
      bench::cmd_run(ropt, std::cout);
    } else if (*bch) {
      bench::BenchOptions bopt;
      bopt.instances_dir = b_instances;
      bopt.out_dir = out_dir;
      bopt.spec.budgets = b_budgets;
      for (const auto& s : b_strategies) bopt.spec.strategies.push_back(strategy_or_throw(s));
      bopt.spec.replications_per_cell = b_reps;
      bopt.spec.eval_reps = b_eval_reps;
      bopt.spec.master_seed = seed;
      bopt.spec.base = cfg.run;
      if (b_threads) bopt.spec.base.threads = *b_threads;
      bopt.spec.cell_threads = b_jobs;
      try {
        bopt.spec.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      bench::cmd_bench(bopt, std::cout);
    } else if (*orc) {
      oopt.instance = o_instance;
      oopt.seed = seed;
      oopt.out_dir = out_dir;
      bench::cmd_oracle(oopt, std::cout);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
