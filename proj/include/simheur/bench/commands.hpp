#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "simheur/bench/benchmark.hpp"
#include "simheur/bench/config_io.hpp"
#include "simheur/bench/oracle.hpp"
#include "simheur/engine/engine.hpp"

namespace simheur::bench {

// The CLI subcommands as library calls. Each writes its files under out_dir
// (created if missing) and a short human-readable report to `log`.

struct GenerateOptions {
  std::size_t count = 50;
  std::size_t jobs = 50;
  std::size_t machines = 4;
  std::uint64_t seed = 1;
  sched::GeneratorParams params;
  std::filesystem::path out_dir = ".";
};

/// Writes instance_000.yaml, instance_001.yaml, ...; instance k uses the
/// seed derived from (seed, k).
std::vector<std::filesystem::path> cmd_generate(const GenerateOptions& options, std::ostream& log);

struct RunOptions {
  std::filesystem::path instance;
  engine::RunConfig config;
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = ".";
};

/// Runs the engine once; writes trace.csv and prints
/// `strategy=<s> budget=<b> estimate=<x> ...`.
engine::RunResult cmd_run(const RunOptions& options, std::ostream& log);

struct BenchOptions {
  std::filesystem::path instances_dir;
  BenchmarkSpec spec;
  std::filesystem::path out_dir = ".";
};

/// Instances are every *.yaml file in instances_dir, in file-name order;
/// instance ids are file stems. Writes bench.csv and bench_aggregate.csv.
std::vector<BenchmarkRow> cmd_bench(const BenchOptions& options, std::ostream& log);

struct OracleOptions {
  std::filesystem::path instance;
  std::uint64_t eval_reps = 10000;
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = ".";
};

/// Enumerates all schedules; writes oracle.csv with both rankings.
OracleReport cmd_oracle(const OracleOptions& options, std::ostream& log);

std::vector<NamedInstance> load_instance_dir(const std::filesystem::path& dir);

/// Seed for generated instance `index` under master `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) noexcept;

}  // namespace simheur::bench
