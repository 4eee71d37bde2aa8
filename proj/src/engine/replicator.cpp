#include "simheur/engine/replicator.hpp"

#include <algorithm>
#include <exception>
#include <span>
#include <thread>

namespace simheur::engine {

namespace {
constexpr std::uint64_t kReplicationTag = 0x7265706C69636174ULL;  // "replicat"
// Below this many replications per worker, threads cost more than they save.
constexpr std::uint64_t kMinPerWorker = 32;
}  // namespace

core::RngStream replication_stream(std::uint64_t seed, std::uint64_t serial, std::uint64_t rep) noexcept {
  return core::substream(seed, core::stream_id_of({kReplicationTag, serial, rep}));
}

Replicator::Replicator(const core::Problem<sched::Schedule>& problem, std::uint64_t seed, unsigned threads)
    : problem_(&problem), seed_(seed), threads_(std::max(1u, threads)) {}

std::vector<double> Replicator::run(const sched::Schedule& solution, std::uint64_t serial,
                                    std::uint64_t first, std::uint64_t count) const {
  std::vector<core::RngStream> streams;
  streams.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) streams.push_back(replication_stream(seed_, serial, first + k));
  std::vector<double> out(count);

  const auto workers = static_cast<unsigned>(
      std::min<std::uint64_t>(threads_, std::max<std::uint64_t>(1, count / kMinPerWorker)));
  if (workers <= 1) {
    problem_->simulate_batch(solution, streams, out);
    return out;
  }

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi] {
      try {
        problem_->simulate_batch(solution, std::span<const core::RngStream>(streams).subspan(lo, hi - lo),
                                 std::span<double>(out).subspan(lo, hi - lo));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace simheur::engine
