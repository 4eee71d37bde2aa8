#include "simheur/bench/oracle.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "simheur/core/errors.hpp"
#include "simheur/kernels/batch_eval.hpp"
#include "simheur/sched/testbed.hpp"

namespace simheur::bench {

namespace {
constexpr std::uint64_t kCrnTag = 0x63726E5F7265706CULL;  // "crn_repl"

bool mul_overflows(unsigned long long a, unsigned long long b, unsigned long long& out) {
  return __builtin_mul_overflow(a, b, &out);
}
}  // namespace

unsigned long long schedule_count(std::size_t n, std::size_t m) noexcept {
  if (m == 0) return n == 0 ? 1 : 0;
  // n! * C(n+m-1, m-1) = (n+m-1)! / (m-1)!
  unsigned long long result = 1;
  for (std::size_t k = m; k <= n + m - 1; ++k)
    if (mul_overflows(result, k, result)) return ULLONG_MAX;
  return result;
}

void for_each_schedule(std::size_t num_jobs, std::size_t num_machines,
                       const std::function<void(const sched::Schedule&)>& visit,
                       unsigned long long max_count) {
  const auto count = schedule_count(num_jobs, num_machines);
  if (count > max_count) throw TooLargeToEnumerate(count);

  // Every schedule is a permutation of the jobs cut into num_machines
  // consecutive (possibly empty) pieces; each (permutation, cut) pair is
  // a distinct schedule.
  std::vector<sched::JobId> perm(num_jobs);
  std::iota(perm.begin(), perm.end(), sched::JobId{0});
  std::vector<std::size_t> cuts(num_machines > 0 ? num_machines - 1 : 0, 0);
  sched::Schedule s;
  s.machine_sequences.resize(num_machines);

  std::function<void(std::size_t, std::size_t)> place_cuts = [&](std::size_t k, std::size_t lo) {
    if (k == cuts.size()) {
      std::size_t begin = 0;
      for (std::size_t mch = 0; mch < num_machines; ++mch) {
        const std::size_t end = mch + 1 < num_machines ? cuts[mch] : num_jobs;
        s.machine_sequences[mch].assign(perm.begin() + static_cast<std::ptrdiff_t>(begin),
                                        perm.begin() + static_cast<std::ptrdiff_t>(end));
        begin = end;
      }
      visit(s);
      return;
    }
    for (std::size_t c = lo; c <= num_jobs; ++c) {
      cuts[k] = c;
      place_cuts(k + 1, c);
    }
  };

  do {
    place_cuts(0, 0);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<sched::Schedule> enumerate_schedules(std::size_t num_jobs, std::size_t num_machines,
                                                 unsigned long long max_count) {
  std::vector<sched::Schedule> out;
  for_each_schedule(num_jobs, num_machines, [&](const sched::Schedule& s) { out.push_back(s); },
                    max_count);
  return out;
}

core::RngStream crn_stream(std::uint64_t seed, std::uint64_t rep) noexcept {
  return core::substream(seed, core::stream_id_of({kCrnTag, rep}));
}

std::vector<stats::SampleStats> crn_estimate(const sched::Instance& instance,
                                             const std::vector<sched::Schedule>& schedules,
                                             std::uint64_t reps, std::uint64_t seed) {
  constexpr std::size_t kBlock = 256;
  const std::size_t n = instance.num_jobs();
  std::vector<sched::FlatSchedule> flat;
  flat.reserve(schedules.size());
  for (const auto& s : schedules) {
    sched::validate(s, n, instance.num_machines());
    flat.emplace_back(s);
  }
  const auto model = kernels::EvalModel::of(instance);
  std::vector<stats::SampleStats> out(schedules.size());
  std::vector<double> block(n * kBlock);
  std::vector<double> durations(n);
  std::vector<double> values(kBlock);

  for (std::uint64_t base = 0; base < reps; base += kBlock) {
    const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, reps - base));
    for (std::size_t r = 0; r < count; ++r) {
      auto stream = crn_stream(seed, base + r);
      sched::sample_durations_into(instance, stream, durations);
      for (std::size_t j = 0; j < n; ++j) block[j * kBlock + r] = durations[j];
    }
    for (std::size_t i = 0; i < schedules.size(); ++i) {
      const kernels::SequenceView seq{flat[i].jobs.data(), flat[i].offsets.data(), flat[i].offsets.size() - 1};
      kernels::evaluate_batch(model, seq, {block.data(), kBlock, count}, values);
      stats::accumulate(out[i], std::span<const double>(values.data(), count));
    }
  }
  return out;
}

std::size_t OracleReport::index_of(const sched::Schedule& schedule) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].schedule == schedule) return i;
  throw std::out_of_range("schedule not in oracle report: " + sched::to_string(schedule));
}

OracleReport run_oracle(const sched::Instance& instance, std::uint64_t eval_reps, std::uint64_t seed,
                        unsigned long long max_count) {
  if (eval_reps == 0) throw std::invalid_argument("oracle needs eval_reps >= 1");
  auto schedules = enumerate_schedules(instance.num_jobs(), instance.num_machines(), max_count);
  const auto est = crn_estimate(instance, schedules, eval_reps, seed);

  OracleReport report;
  report.eval_reps = eval_reps;
  report.entries.reserve(schedules.size());
  for (std::size_t i = 0; i < schedules.size(); ++i) {
    OracleEntry e;
    e.det_value = sched::deterministic_objective(instance, schedules[i]);
    e.schedule = std::move(schedules[i]);
    e.stats = est[i];
    report.entries.push_back(std::move(e));
  }

  std::vector<std::size_t> order(report.entries.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto rank_by = [&](auto key, auto assign) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key(report.entries[a]) < key(report.entries[b]); });
    for (std::size_t r = 0; r < order.size(); ++r) assign(report.entries[order[r]], r);
    return order.front();
  };
  report.det_best = rank_by([](const OracleEntry& e) { return e.det_value; },
                            [](OracleEntry& e, std::size_t r) { e.det_rank = r; });
  std::iota(order.begin(), order.end(), std::size_t{0});
  report.stochastic_best = rank_by([](const OracleEntry& e) { return e.stats.mean; },
                                   [](OracleEntry& e, std::size_t r) { e.stochastic_rank = r; });
  return report;
}

}  // namespace simheur::bench
