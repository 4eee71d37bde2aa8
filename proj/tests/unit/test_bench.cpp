#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "simheur/bench/benchmark.hpp"
#include "simheur/bench/commands.hpp"
#include "simheur/bench/config_io.hpp"
#include "simheur/bench/oracle.hpp"
#include "simheur/core/errors.hpp"
#include "simheur/sched/generator.hpp"
#include "simheur/sched/instance_io.hpp"
#include "simheur/sched/testbed.hpp"

using namespace simheur;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("simheur_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

unsigned long long factorial(unsigned n) { return n <= 1 ? 1 : n * factorial(n - 1); }
unsigned long long choose(unsigned n, unsigned k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("schedule counts") {
    CHECK(bench::schedule_count(1, 1) == 1);
    CHECK(bench::enumerate_schedules(1, 1).size() == 1);
    // Sum over subsets sent to machine 0 of the orderings on both machines.
    unsigned long long sum = 0;
    for (unsigned k = 0; k <= 4; ++k) sum += choose(4, k) * factorial(k) * factorial(4 - k);
    CHECK(sum == 120);
    CHECK(bench::schedule_count(4, 2) == sum);
    const auto all = bench::enumerate_schedules(4, 2);
    CHECK(all.size() == sum);
    std::set<std::string> distinct;
    for (const auto& s : all) {
      CHECK(sched::is_valid(s, 4, 2));
      distinct.insert(sched::to_string(s));
    }
    CHECK(distinct.size() == all.size());
    CHECK(bench::enumerate_schedules(3, 3).size() == bench::schedule_count(3, 3));
    CHECK(bench::schedule_count(3, 3) == 60);
  }

  TEST_CASE("too large to enumerate") {
    CHECK_THROWS_AS(bench::enumerate_schedules(12, 2), TooLargeToEnumerate);
  }

  TEST_CASE("crn estimates share realizations") {
    const auto inst = sched::generate_instance(4, 2, 1);
    const auto all = bench::enumerate_schedules(4, 2);
    const auto est = bench::crn_estimate(inst, all, 300, 5);
    for (std::size_t i = 0; i < all.size(); i += 17) {
      stats::SampleStats s;
      for (std::uint64_t k = 0; k < 300; ++k) stats::accumulate(s, sched::simulate(inst, all[i], bench::crn_stream(5, k)));
      CHECK(est[i].mean == doctest::Approx(s.mean).epsilon(1e-12));
    }
  }

  TEST_CASE("rankings differ on some high-cv instance") {
    sched::GeneratorParams gp;
    gp.cv = 1.5;
    bool differ = false;
    for (std::uint64_t seed = 0; seed < 20 && !differ; ++seed) {
      const auto r = bench::run_oracle(sched::generate_instance(4, 2, seed, gp), 5000, 1);
      differ = r.det_best != r.stochastic_best;
      CHECK(r.entries[r.det_best].det_rank == 0);
      CHECK(r.entries[r.stochastic_best].stochastic_rank == 0);
    }
    CHECK(differ);
  }
}

TEST_SUITE("config") {
  TEST_CASE("round trip") {
    bench::ConfigFile c;
    c.run.strategy = engine::Strategy::fixed_interval;
    c.run.eoc_threshold = 0.25;
    c.run.admission = engine::AdmissionRule::gap_corrected;
    c.generator.cv = 0.9;
    const auto back = bench::parse_config(bench::write_config(c));
    CHECK(bench::write_config(back) == bench::write_config(c));
    CHECK(back.run.strategy == engine::Strategy::fixed_interval);
    CHECK(back.generator.cv == 0.9);
  }

  TEST_CASE("unknown key names its line") {
    try {
      bench::parse_config("total_budget: 100\n\neoc_treshold: 0.1\n", "cfg.yaml");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("eoc_treshold") != std::string::npos);
    }
  }

  TEST_CASE("bad values") {
    CHECK_THROWS_AS(bench::parse_config("strategy: greedy\n"), ParseError);
    CHECK_THROWS_AS(bench::parse_config("threads: 0\n"), ParseError);
    CHECK_THROWS_AS(bench::parse_config("total_budget: lots\n"), ParseError);
    CHECK_THROWS_AS(bench::parse_config("annealing: {cooling: 0.9, bogus: 1}\n"), ParseError);
    CHECK_THROWS_AS(bench::parse_config("finalize_fraction: 1.5\n"), ParseError);
  }

  TEST_CASE("missing keys keep the base") {
    bench::ConfigFile base;
    base.run.total_budget = 777;
    const auto c = bench::parse_config("n0: 7\n", "x", base);
    CHECK(c.run.total_budget == 777);
    CHECK(c.run.n0 == 7);
  }
}

TEST_SUITE("benchmark") {
  TEST_CASE("one cell, one row; aggregate is the row mean") {
    std::vector<bench::NamedInstance> inst{{"a", sched::generate_instance(8, 2, 1)}};
    bench::BenchmarkSpec spec;
    spec.budgets = {500};
    spec.strategies = {engine::Strategy::ocba_guided};
    spec.eval_reps = 200;
    const auto rows = bench::run_benchmark(spec, inst);
    REQUIRE(rows.size() == 1);
    const auto agg = bench::aggregate(rows, spec.strategies);
    REQUIRE(agg.size() == 1);
    CHECK(agg[0].mean_oracle_objective == doctest::Approx(rows[0].oracle_objective_estimate).epsilon(1e-9));
  }

  TEST_CASE("aggregates recompute from rows") {
    std::vector<bench::NamedInstance> inst{{"a", sched::generate_instance(8, 2, 1)},
                                           {"b", sched::generate_instance(8, 2, 2)}};
    bench::BenchmarkSpec spec;
    spec.budgets = {300, 600};
    spec.strategies = {engine::Strategy::dcop_only, engine::Strategy::simulate_all_promising};
    spec.replications_per_cell = 2;
    spec.eval_reps = 100;
    spec.cell_threads = 3;
    const auto rows = bench::run_benchmark(spec, inst);
    CHECK(rows.size() == 2 * 2 * 2 * 2);
    for (const auto& a : bench::aggregate(rows, spec.strategies)) {
      double sum = 0;
      int n = 0;
      for (const auto& r : rows)
        if (r.strategy == a.strategy && r.budget == a.budget) {
          sum += r.oracle_objective_estimate;
          ++n;
        }
      CHECK(a.runs == static_cast<std::uint64_t>(n));
      CHECK(a.mean_oracle_objective == doctest::Approx(sum / n).epsilon(1e-9));
    }
    spec.cell_threads = 1;
    const auto serial = bench::run_benchmark(spec, inst);
    std::ostringstream x, y;
    bench::write_rows_csv(x, rows);
    bench::write_rows_csv(y, serial);
    CHECK(x.str() == y.str());
  }

  TEST_CASE("row csv header") {
    std::ostringstream os;
    bench::write_rows_csv(os, {});
    CHECK(os.str() ==
          "instance_id,strategy,budget,run_seed,returned_objective_estimate,oracle_objective_estimate,oracle_se\n");
  }

  TEST_CASE("grid validation") {
    bench::BenchmarkSpec spec;
    spec.strategies = {engine::Strategy::dcop_only};
    spec.budgets = {10, 5};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.budgets = {};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  }
}

TEST_SUITE("commands") {
  TEST_CASE("generate defaults and determinism") {
    const auto a = scratch("gen_a"), b = scratch("gen_b");
    std::ostringstream log;
    bench::GenerateOptions g;
    g.out_dir = a;
    const auto paths = bench::cmd_generate(g, log);
    CHECK(paths.size() == 50);
    const auto first = sched::load_instance(paths.front());
    CHECK(first.num_jobs() == 50);
    CHECK(first.num_machines() == 4);
    g.out_dir = b;
    g.count = 3;
    bench::cmd_generate(g, log);
    for (int k = 0; k < 3; ++k) {
      const auto name = "instance_00" + std::to_string(k) + ".yaml";
      CHECK(slurp(a / name) == slurp(b / name));
    }
  }

  TEST_CASE("tiny instances pass through") {
    const auto d = scratch("gen_tiny");
    std::ostringstream log;
    bench::GenerateOptions g;
    g.out_dir = d;
    g.count = 2;
    g.jobs = 4;
    g.machines = 2;
    bench::cmd_generate(g, log);
    const auto inst = sched::load_instance(d / "instance_001.yaml");
    CHECK(inst.num_jobs() == 4);
    CHECK(inst.num_machines() == 2);
  }

  TEST_CASE("run on a cv 0 instance reports the deterministic value") {
    const auto d = scratch("run_cv0");
    sched::GeneratorParams gp;
    gp.cv = 0.0;
    sched::save_instance(sched::generate_instance(10, 2, 1, gp), d / "i.yaml");
    bench::RunOptions r;
    r.instance = d / "i.yaml";
    r.config.strategy = engine::Strategy::dcop_only;
    r.config.total_budget = 500;
    r.out_dir = d;
    std::ostringstream log;
    const auto res = bench::cmd_run(r, log);
    CHECK(res.estimated_expected_objective == doctest::Approx(res.deterministic_value).epsilon(1e-12));
    CHECK(log.str().rfind("strategy=dcop-only budget=500 estimate=", 0) == 0);
    CHECK(fs::exists(d / "trace.csv"));
  }

  TEST_CASE("repeated runs write identical traces") {
    const auto d = scratch("run_repeat");
    sched::save_instance(sched::generate_instance(10, 2, 1), d / "i.yaml");
    bench::RunOptions r;
    r.instance = d / "i.yaml";
    r.config.total_budget = 1000;
    r.seed = 7;
    std::ostringstream log;
    r.out_dir = d / "a";
    bench::cmd_run(r, log);
    r.out_dir = d / "b";
    r.config.threads = 3;
    bench::cmd_run(r, log);
    CHECK(slurp(d / "a" / "trace.csv") == slurp(d / "b" / "trace.csv"));
    CHECK(slurp(d / "a" / "trace.csv").find(",eoc_checked,") != std::string::npos);
  }

  TEST_CASE("oracle command") {
    const auto d = scratch("oracle");
    sched::save_instance(sched::generate_instance(4, 2, 3), d / "t.yaml");
    bench::OracleOptions o;
    o.instance = d / "t.yaml";
    o.eval_reps = 500;
    o.out_dir = d;
    std::ostringstream log;
    const auto rep = bench::cmd_oracle(o, log);
    CHECK(rep.entries.size() == 120);
    CHECK(log.str().find("schedules=120") != std::string::npos);
    std::ifstream is(d / "oracle.csv");
    std::string line;
    int lines = 0;
    while (std::getline(is, line)) ++lines;
    CHECK(lines == 121);
  }

  TEST_CASE("empty instance directory") {
    CHECK_THROWS(bench::load_instance_dir(scratch("empty")));
  }
}

TEST_CASE("an infinite promising gap survives a round trip") {
  bench::ConfigFile c;
  c.run.promising.relative_gap = std::numeric_limits<double>::infinity();
  CHECK(std::isinf(bench::parse_config(bench::write_config(c)).run.promising.relative_gap));
}
