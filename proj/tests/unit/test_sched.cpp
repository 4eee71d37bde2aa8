#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "simheur/core/errors.hpp"
#include "simheur/core/rng.hpp"
#include "simheur/sched/generator.hpp"
#include "simheur/sched/instance_io.hpp"
#include "simheur/sched/testbed.hpp"

using namespace simheur;
using simheur::testing::seq;
using simheur::testing::two_job_instance;

TEST_SUITE("schedule") {
  TEST_CASE("validity") {
    CHECK(sched::is_valid(seq({{0, 1}, {}}), 2, 2));
    CHECK_FALSE(sched::is_valid(seq({{0, 0}, {}}), 2, 2));
    CHECK_FALSE(sched::is_valid(seq({{0}, {}}), 2, 2));
    CHECK_FALSE(sched::is_valid(seq({{0, 1}}), 2, 2));
    CHECK_FALSE(sched::is_valid(seq({{0, 2}, {}}), 2, 2));
    CHECK_THROWS_AS(sched::validate(seq({{0, 0}}), 2, 1), InvalidSchedule);
  }

  TEST_CASE("text round trip") {
    const auto s = seq({{0, 3}, {}, {1, 2}});
    CHECK(sched::schedule_from_string(sched::to_string(s)) == s);
  }
}

TEST_SUITE("evaluate") {
  TEST_CASE("two jobs in order A, B") {
    const auto inst = two_job_instance();
    const std::vector<double> d{3.0, 4.0};
    // C_A = 3, C_B = 3 + 1 + 4 = 8; tardiness 0 + 2; makespan 8.
    CHECK(sched::evaluate(inst, seq({{0, 1}}), d) == doctest::Approx(2.8));
  }

  TEST_CASE("two jobs in order B, A") {
    const auto inst = two_job_instance();
    const std::vector<double> d{3.0, 4.0};
    // C_B = 4, C_A = 4 + 1 + 3 = 8; tardiness 0 + 3; makespan 8.
    CHECK(sched::evaluate(inst, seq({{1, 0}}), d) == doctest::Approx(3.8));
  }

  TEST_CASE("single job makespan only") {
    sched::Instance inst({{0, 7.5, 0.0, 0.0}}, 1, {0.0, 0.0}, 0.0, 1.0);
    CHECK(sched::evaluate(inst, seq({{0}}), std::vector<double>{7.5}) == 7.5);
  }

  TEST_CASE("an empty machine changes nothing") {
    const auto one = two_job_instance();
    sched::Instance two(one.jobs(), 2, {one.setup_matrix().begin(), one.setup_matrix().end()}, 1.0, 0.1);
    const std::vector<double> d{3.0, 4.0};
    CHECK(sched::evaluate(two, seq({{0, 1}, {}}), d) == sched::evaluate(one, seq({{0, 1}}), d));
    CHECK(sched::evaluate(two, seq({{}, {0, 1}}), d) == sched::evaluate(one, seq({{0, 1}}), d));
  }

  TEST_CASE("invalid schedules are rejected") {
    const auto inst = two_job_instance();
    CHECK_THROWS_AS(sched::evaluate(inst, seq({{0}}), std::vector<double>{3, 4}), InvalidSchedule);
  }

  TEST_CASE("deterministic objective uses the means") {
    const auto inst = two_job_instance(0.5);
    CHECK(sched::deterministic_objective(inst, seq({{0, 1}})) == doctest::Approx(2.8));
    CHECK(sched::deterministic_objective(inst, seq({{1, 0}})) == doctest::Approx(3.8));
  }
}

TEST_SUITE("durations") {
  TEST_CASE("cv 0 returns the mean") {
    const auto inst = two_job_instance(0.0);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto d = sched::sample_durations(inst, core::RngStream(s, 1));
      CHECK(d[0] == 3.0);
      CHECK(d[1] == 4.0);
    }
  }

  TEST_CASE("lognormal keeps the mean") {
    const auto p = sched::lognormal_for(10.0, 0.5);
    core::RngStream rng(2024, 77);
    const int n = 1'000'000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = std::exp(p.mu + p.sigma * rng.standard_normal());
      REQUIRE(x > 0.0);
      sum += x;
      sq += x * x;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sq / n - mean * mean) / n);
    CHECK(std::abs(mean - 10.0) <= 3.0 * se);
  }

  TEST_CASE("samples are positive across parameters") {
    core::RngStream rng(1, 1);
    for (double cv : {0.01, 0.5, 1.0, 3.0})
      for (double m : {0.001, 1.0, 1e4}) {
        const auto p = sched::lognormal_for(m, cv);
        for (int i = 0; i < 1000; ++i) REQUIRE(std::exp(p.mu + p.sigma * rng.standard_normal()) > 0.0);
      }
  }
}

TEST_SUITE("simulate") {
  TEST_CASE("cv 0 matches the deterministic objective") {
    const auto inst = sched::generate_instance(8, 2, 3, {.cv = 0.0});
    const auto s = seq({{0, 1, 2, 3}, {4, 5, 6, 7}});
    for (std::uint64_t k = 0; k < 10; ++k)
      CHECK(sched::simulate(inst, s, core::RngStream(9, k)) == sched::deterministic_objective(inst, s));
  }

  TEST_CASE("fixed stream is reproducible") {
    const auto inst = two_job_instance(0.5);
    CHECK(sched::simulate(inst, seq({{0, 1}}), core::RngStream(5, 5)) ==
          sched::simulate(inst, seq({{0, 1}}), core::RngStream(5, 5)));
  }

  TEST_CASE("batch simulation matches one-at-a-time") {
    const auto inst = sched::generate_instance(12, 3, 8);
    const sched::SchedulingProblem problem(inst);
    const auto s = seq({{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}});
    std::vector<core::RngStream> streams;
    for (std::uint64_t k = 0; k < 150; ++k) streams.emplace_back(7, k);
    std::vector<double> out(streams.size());
    problem.simulate_batch(s, streams, out);
    for (std::size_t k = 0; k < streams.size(); ++k) CHECK(out[k] == problem.simulate(s, streams[k]));
  }

  TEST_CASE("expected objective is at least the objective at the means") {
    const auto inst = two_job_instance(0.5);
    const auto s = seq({{0, 1}});
    const int n = 100000;
    double sum = 0.0, sq = 0.0;
    for (int k = 0; k < n; ++k) {
      const double v = sched::simulate(inst, s, core::RngStream(17, static_cast<std::uint64_t>(k)));
      sum += v;
      sq += v * v;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sq / n - mean * mean) / (n - 1));
    CHECK(mean >= sched::deterministic_objective(inst, s) - 3.0 * se);
  }
}

TEST_SUITE("generator") {
  TEST_CASE("same seed, same instance") {
    CHECK(sched::write_instance(sched::generate_instance(20, 2, 5)) ==
          sched::write_instance(sched::generate_instance(20, 2, 5)));
    CHECK(sched::write_instance(sched::generate_instance(20, 2, 5)) !=
          sched::write_instance(sched::generate_instance(20, 2, 6)));
  }

  TEST_CASE("50 jobs on 4 machines") {
    const auto inst = sched::generate_instance(50, 4, 1);
    CHECK(inst.num_jobs() == 50);
    CHECK(inst.num_machines() == 4);
    CHECK(inst.setup_matrix().size() == 51 * 50);
  }

  TEST_CASE("ranges and zero diagonal") {
    const sched::GeneratorParams p;
    const auto inst = sched::generate_instance(30, 3, 2, p);
    for (const auto& j : inst.jobs()) {
      CHECK(j.mean_duration >= p.dur_lo);
      CHECK(j.mean_duration <= p.dur_hi);
      CHECK(j.due_date >= 0.0);
      CHECK(j.cv == p.cv);
    }
    for (sched::JobId a = 0; a < 30; ++a) {
      CHECK(inst.setup_after(a, a) == 0.0);
      CHECK(inst.initial_setup(a) >= p.setup_lo);
      for (sched::JobId b = 0; b < 30; ++b)
        if (a != b) {
          CHECK(inst.setup_after(a, b) >= p.setup_lo);
          CHECK(inst.setup_after(a, b) <= p.setup_hi);
        }
    }
  }

  TEST_CASE("TF = RDD = 0 puts every due date at the load estimate") {
    sched::GeneratorParams p;
    p.tardiness_factor = 0.0;
    p.due_date_range = 0.0;
    const auto inst = sched::generate_instance(15, 3, 4, p);
    // Recompute the load estimate from the instance.
    double means = 0.0, setups = 0.0;
    int count = 0;
    for (double m : inst.mean_durations()) means += m;
    for (sched::JobId j = 0; j < 15; ++j) {
      setups += inst.initial_setup(j);
      ++count;
      for (sched::JobId k = 0; k < 15; ++k)
        if (j != k) {
          setups += inst.setup_after(j, k);
          ++count;
        }
    }
    const double cbar = (means + setups / count * 15) / 3.0;
    for (double d : inst.due_dates()) CHECK(d == doctest::Approx(cbar).epsilon(1e-12));
  }
}

TEST_SUITE("instance_io") {
  TEST_CASE("round trip is exact") {
    const auto inst = sched::generate_instance(10, 3, 99);
    const auto text = sched::write_instance(inst);
    const auto back = sched::parse_instance(text);
    CHECK(sched::write_instance(back) == text);
    for (std::size_t j = 0; j < 10; ++j) CHECK(back.jobs()[j].mean_duration == inst.jobs()[j].mean_duration);
  }

  TEST_CASE("errors carry a line number") {
    const auto text = sched::write_instance(two_job_instance());
    std::string broken = text;
    const auto pos = broken.find("due_date");
    REQUIRE(pos != std::string::npos);
    broken.replace(pos, 8, "due_dat");
    try {
      sched::parse_instance(broken, "inst.yaml");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.source() == "inst.yaml");
      CHECK(e.line() > 0);
    }
  }

  TEST_CASE("negative mean is rejected") {
    auto text = sched::write_instance(two_job_instance());
    const auto pos = text.find("mean_duration: 3");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 16, "mean_duration: -3");
    CHECK_THROWS_AS(sched::parse_instance(text), ParseError);
  }

  TEST_CASE("not yaml") { CHECK_THROWS_AS(sched::parse_instance("jobs: [1, 2\n"), ParseError); }
}
