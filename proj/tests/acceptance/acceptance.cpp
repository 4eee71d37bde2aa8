// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include "simheur/bench/benchmark.hpp"
#include "simheur/bench/commands.hpp"
#include "simheur/bench/oracle.hpp"
#include "simheur/core/rng.hpp"
#include "simheur/engine/engine.hpp"
#include "simheur/sched/generator.hpp"
#include "simheur/sched/instance_io.hpp"
#include "simheur/sched/testbed.hpp"
#include "simheur/search/moves.hpp"
#include "simheur/stats/belief.hpp"
#include "simheur/stats/ocba.hpp"

using namespace simheur;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("simheur_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// 1. Bonferroni EOC against Monte-Carlo posterior opportunity cost.
Verdict eoc_bound() {
  const auto t0 = Clock::now();
  core::RngStream r(20240601, 1);
  const int cases = 1000, draws = 100000;
  int ok = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string misses;
  std::vector<double> x;
  for (int c = 0; c < cases; ++c) {
    const std::size_t k = 2 + r.below(4);
    std::vector<stats::Belief> bs(k);
    for (auto& b : bs) {
      b.n = 5 + r.below(100);
      b.posterior_mean = r.uniform(0.0, 4.0);
      b.posterior_var = r.uniform(0.01, 2.0);
    }
    const std::size_t best = stats::select_best(bs);
    double sum = 0.0, sq = 0.0;
    x.resize(k);
    for (int d = 0; d < draws; ++d) {
      for (std::size_t i = 0; i < k; ++i)
        x[i] = bs[i].posterior_mean + std::sqrt(bs[i].posterior_var) * r.standard_normal();
      const double loss = std::max(0.0, x[best] - *std::min_element(x.begin(), x.end()));
      sum += loss;
      sq += loss * loss;
    }
    const double mc = sum / draws;
    const double se = std::sqrt(std::max(0.0, sq / draws - mc * mc) / draws);
    const double margin = stats::eoc_bonferroni(bs) - (mc - 3.0 * se);
    worst_margin = std::min(worst_margin, margin);
    if (margin >= 0.0) {
      ++ok;
    } else {
      misses += fmt::format(" [k={} eoc={:.5f} mc={:.5f} se={:.5f}", k, stats::eoc_bonferroni(bs), mc, se);
      for (const auto& b : bs) misses += fmt::format(" ({:.17g},{:.17g})", b.posterior_mean, b.posterior_var);
      misses += "]";
    }
  }
  const std::vector<stats::Belief> tie{{0.0, 0.5, 10}, {0.0, 0.5, 10}};
  const double e0 = stats::eoc_bonferroni(tie);
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = ok == cases && std::abs(e0 - 0.39894) <= 1e-5 && secs < 60.0;
  v.detail = fmt::format("bound held in {}/{} cases (worst margin {:.3g}){}; tie eoc={:.6f}; {:.1f}s", ok, cases,
                         worst_margin, misses, e0, secs);
  return v;
}

// 2. OCBA ratio law on realized counts, checked against the closed form.
Verdict ocba_ratio_law() {
  core::RngStream r(777, 2);
  const int cases = 1000;
  int ok = 0;
  double worst = 0.0;
  for (int c = 0; c < cases; ++c) {
    const std::size_t k = 2 + r.below(4);
    const std::uint64_t n0 = 5;
    std::vector<stats::Belief> bs(k);
    std::vector<double> sd(k);
    const double base = r.uniform(50.0, 150.0);
    for (std::size_t i = 0; i < k; ++i) {
      sd[i] = r.uniform(1.0, 4.0);
      const double gap = i == 0 ? 0.0 : r.uniform(0.5, 4.0);
      bs[i] = stats::Belief{base + gap, sd[i] * sd[i] / static_cast<double>(n0), n0};
    }
    const std::uint64_t delta = 100000;
    const auto alloc = stats::ocba_allocate(bs, delta);

    std::uint64_t granted = 0;
    for (auto a : alloc.additional_reps) granted += a;

    // Closed form: w_i = (sd_i / gap_i)^2, w_b = sd_b * sqrt(sum (w_i / sd_i)^2).
    std::vector<double> w(k);
    double acc = 0.0;
    for (std::size_t i = 1; i < k; ++i) {
      const double gap = bs[i].posterior_mean - bs[0].posterior_mean;
      w[i] = std::pow(sd[i] / gap, 2);
      acc += std::pow(w[i] / sd[i], 2);
    }
    w[0] = sd[0] * std::sqrt(acc);
    double wsum = 0.0;
    for (double v : w) wsum += v;
    const double total = static_cast<double>(k * n0 + delta);

    bool good = granted == delta;
    for (std::size_t i = 0; i < k; ++i) {
      const double realized = static_cast<double>(n0 + alloc.additional_reps[i]);
      const double target = total * w[i] / wsum;
      worst = std::max(worst, std::abs(realized - target));
      good = good && std::abs(realized - target) <= 1.0 + 1e-9;
    }
    for (std::size_t i = 1; i < k; ++i)
      for (std::size_t j = 1; j < k; ++j) {
        const double ratio = w[i] / w[j];
        const double ni = static_cast<double>(n0 + alloc.additional_reps[i]);
        const double nj = static_cast<double>(n0 + alloc.additional_reps[j]);
        good = good && std::abs(ni - ratio * nj) <= 1.0 + ratio + 1e-9;
      }
    if (good) ++ok;
  }
  Verdict v;
  v.pass = ok == cases;
  v.detail = fmt::format("{}/{} cases conserve delta and match the ratio law (max |N - target| = {:.3f})", ok,
                         cases, worst);
  return v;
}

// 3. Tiny instances: ocba-guided against full enumeration.
Verdict tiny_oracle() {
  const auto t0 = Clock::now();
  sched::GeneratorParams gp;
  gp.cv = 0.5;
  int within = 0;
  bool counts_ok = true;
  std::string per;
  for (std::uint64_t k = 0; k < 5; ++k) {
    const auto inst = sched::generate_instance(4, 2, bench::instance_seed(3, k), gp);
    const auto report = bench::run_oracle(inst, 100000, 11 + k);
    std::set<std::string> distinct;
    for (const auto& e : report.entries) distinct.insert(sched::to_string(e.schedule));
    counts_ok = counts_ok && report.entries.size() == bench::schedule_count(4, 2) && distinct.size() == 120;

    engine::RunConfig cfg;
    cfg.strategy = engine::Strategy::ocba_guided;
    cfg.total_budget = 50000;
    const auto result = engine::run(sched::SchedulingProblem(inst), cfg, 100 + k);
    const double best = report.entries[report.stochastic_best].stats.mean;
    const double got = report.entries[report.index_of(result.best_schedule)].stats.mean;
    const double rel = (got - best) / std::abs(best);
    if (rel <= 0.02) ++within;
    per += fmt::format(" {:.2f}%", 100.0 * rel);
  }
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = within >= 4 && counts_ok && secs < 600.0;
  v.detail = fmt::format("{}/5 within 2% (gaps:{}); enumerated {} schedules each; {:.1f}s", within, per,
                         bench::schedule_count(4, 2), secs);
  return v;
}

// 4. E[f(X)] >= f(E[X]) - 3 SE.
Verdict flaw_of_averages() {
  core::RngStream r(4242, 4);
  sched::GeneratorParams gp;
  gp.cv = 0.5;
  int ok = 0;
  double mean_ratio = 0.0;
  for (int c = 0; c < 100; ++c) {
    const std::size_t n = 2 + r.below(29), m = 1 + r.below(4);
    const auto inst = sched::generate_instance(n, m, r.next_u64(), gp);
    auto s = search::initial_solution(inst);
    for (int step = 0; step < 100; ++step) s = search::neighbor(s, r);
    const std::vector<sched::Schedule> one{s};
    const auto est = bench::crn_estimate(inst, one, 10000, r.next_u64())[0];
    const double se = std::sqrt(est.variance() / static_cast<double>(est.n));
    const double det = sched::deterministic_objective(inst, s);
    if (est.mean >= det - 3.0 * se) ++ok;
    mean_ratio += est.mean / det / 100.0;
  }
  Verdict v;
  v.pass = ok == 100;
  v.detail = fmt::format("{}/100 pairs satisfy the bound; mean E[f]/f(E) = {:.3f}", ok, mean_ratio);
  return v;
}

// 5. Desk-scale sweep.
Verdict desk_sweep() {
  const auto t0 = Clock::now();
  std::vector<bench::NamedInstance> instances;
  for (std::size_t k = 0; k < 10; ++k) {
    sched::GeneratorParams gp;
    gp.cv = 0.5;
    instances.push_back({fmt::format("instance_{:03}", k), sched::generate_instance(20, 2, bench::instance_seed(1, k), gp)});
  }
  bench::BenchmarkSpec spec;
  spec.budgets = {1000, 10000, 100000};
  spec.strategies = {engine::Strategy::dcop_only, engine::Strategy::fixed_interval,
                     engine::Strategy::simulate_all_promising, engine::Strategy::ocba_guided};
  spec.eval_reps = 10000;
  spec.master_seed = 1;
  spec.cell_threads = std::max(1u, std::thread::hardware_concurrency());
  const auto rows = bench::run_benchmark(spec, instances);
  const auto agg = bench::aggregate(rows, spec.strategies);

  auto at = [&](engine::Strategy s, std::uint64_t b) {
    for (const auto& a : agg)
      if (a.strategy == s && a.budget == b) return a.mean_oracle_objective;
    return std::numeric_limits<double>::quiet_NaN();
  };
  std::string table;
  for (const auto& a : agg)
    table += fmt::format("\n    {:<24} {:>7} {:>10.3f}", engine::to_string(a.strategy), a.budget,
                         a.mean_oracle_objective);
  const double ocba = at(engine::Strategy::ocba_guided, 100000);
  const double dcop = at(engine::Strategy::dcop_only, 100000);
  const double best_baseline = std::min({dcop, at(engine::Strategy::fixed_interval, 100000),
                                         at(engine::Strategy::simulate_all_promising, 100000)});
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = ocba <= dcop && ocba <= 1.01 * best_baseline && secs < 1800.0;
  v.detail = fmt::format("at 1e5: ocba-guided {:.3f}, dcop-only {:.3f}, best baseline {:.3f}; {:.1f}s{}", ocba,
                         dcop, best_baseline, secs, table);
  return v;
}

// 6. Byte-identical CSVs across repeats and parallelism settings.
Verdict determinism() {
  const auto dir = scratch("determinism");
  std::ostringstream log;
  bench::GenerateOptions g;
  g.count = 3;
  g.jobs = 12;
  g.machines = 2;
  g.seed = 5;
  g.out_dir = dir / "inst";
  bench::cmd_generate(g, log);

  bool same = true;
  int compared = 0;
  for (auto s : {engine::Strategy::dcop_only, engine::Strategy::fixed_interval,
                 engine::Strategy::simulate_all_promising, engine::Strategy::ocba_guided}) {
    std::string first;
    for (unsigned threads : {1u, 1u, 2u, 4u}) {
      bench::RunOptions r;
      r.instance = dir / "inst" / "instance_000.yaml";
      r.config.strategy = s;
      r.config.total_budget = 5000;
      r.config.threads = threads;
      r.seed = 7;
      r.out_dir = dir / fmt::format("run_{}_{}", engine::to_string(s), threads);
      bench::cmd_run(r, log);
      const auto text = slurp(r.out_dir / "trace.csv");
      if (first.empty()) first = text;
      same = same && !text.empty() && text == first;
      ++compared;
    }
  }

  std::string rows0, agg0;
  for (auto [cells, threads] : {std::pair{1u, 1u}, std::pair{1u, 1u}, std::pair{3u, 1u}, std::pair{2u, 4u}}) {
    bench::BenchOptions b;
    b.instances_dir = dir / "inst";
    b.spec.budgets = {500, 2000};
    b.spec.strategies = {engine::Strategy::dcop_only, engine::Strategy::ocba_guided};
    b.spec.replications_per_cell = 2;
    b.spec.eval_reps = 500;
    b.spec.master_seed = 9;
    b.spec.cell_threads = cells;
    b.spec.base.threads = threads;
    b.out_dir = dir / fmt::format("bench_{}_{}", cells, threads);
    bench::cmd_bench(b, log);
    const auto rows = slurp(b.out_dir / "bench.csv");
    const auto agg = slurp(b.out_dir / "bench_aggregate.csv");
    if (rows0.empty()) {
      rows0 = rows;
      agg0 = agg;
    }
    same = same && rows == rows0 && agg == agg0;
    compared += 2;
  }
  Verdict v;
  v.pass = same;
  v.detail = fmt::format("{} CSV files compared across repeats and thread settings", compared);
  return v;
}

// 7. Engine invariants on random short runs.
Verdict engine_invariants() {
  core::RngStream r(31337, 7);
  const engine::Strategy strategies[] = {engine::Strategy::ocba_guided, engine::Strategy::fixed_interval,
                                         engine::Strategy::simulate_all_promising, engine::Strategy::dcop_only};
  int runs_ok = 0, switches = 0, exhausted_switches = 0;
  std::string first_failure;
  for (int c = 0; c < 50; ++c) {
    sched::GeneratorParams gp;
    gp.cv = r.uniform(0.0, 1.0);
    const std::size_t n = 3 + r.below(18), m = 1 + r.below(3);
    const sched::SchedulingProblem problem(sched::generate_instance(n, m, r.next_u64(), gp));
    engine::RunConfig cfg;
    cfg.strategy = c < 35 ? engine::Strategy::ocba_guided : strategies[c % 4];
    cfg.total_budget = 200 + r.below(3000);
    cfg.elite_capacity = 1 + r.below(10);
    cfg.n0 = 2 + r.below(6);
    cfg.ocba_delta = 5 + r.below(30);
    cfg.eoc_threshold = r.uniform(0.001, 0.05);
    cfg.check_interval = 50 + r.below(500);
    cfg.threads = 1 + static_cast<unsigned>(r.below(4));
    const auto res = engine::run(problem, cfg, r.next_u64());

    bool ok = res.budget_spent <= static_cast<double>(cfg.total_budget) * (1.0 + 1e-9) &&
              res.final_elite.size() <= cfg.elite_capacity;
    double last_eoc = std::numeric_limits<double>::quiet_NaN(), last_thr = 0.0;
    for (const auto& ev : res.trace.events()) {
      const double rebuilt = ev.number("sim") + cfg.det_eval_cost * ev.number("det");
      ok = ok && std::abs(rebuilt - ev.budget_spent) <= 1e-9 * (1.0 + ev.budget_spent);
      ok = ok && ev.budget_spent <= static_cast<double>(cfg.total_budget) * (1.0 + 1e-9);
      if (ev.get("elite")) ok = ok && ev.number("elite") <= static_cast<double>(cfg.elite_capacity);
      if (ev.kind == engine::EventKind::eoc_checked) {
        last_eoc = ev.number("eoc");
        last_thr = ev.number("threshold");
      }
      if (ev.kind == engine::EventKind::phase_switch && ev.get("to") == "search") {
        ++switches;
        if (ev.get("budget_exhausted")) {
          ++exhausted_switches;
        } else {
          ok = ok && last_eoc <= last_thr;
        }
      }
    }
    ok = ok && std::abs(res.trace.events().back().budget_spent - res.budget_spent) <= 1e-9 * (1.0 + res.budget_spent);
    if (ok) {
      ++runs_ok;
    } else if (first_failure.empty()) {
      first_failure = fmt::format(" first failure: run {}", c);
    }
  }
  Verdict v;
  v.pass = runs_ok == 50;
  v.detail = fmt::format("{}/50 runs clean; {} returns to search ({} flagged budget-exhausted){}", runs_ok, switches,
                         exhausted_switches, first_failure);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"EOC Bonferroni bound vs Monte-Carlo", eoc_bound},
      {"OCBA ratio law and conservation", ocba_ratio_law},
      {"tiny-instance oracle equivalence", tiny_oracle},
      {"flaw-of-averages direction", flaw_of_averages},
      {"desk-scale strategy sweep", desk_sweep},
      {"determinism of CSV output", determinism},
      {"engine invariant suite", engine_invariants},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    fmt::print("CRITERION {} {}: {} - {}\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first, v.detail);
    std::fflush(stdout);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
