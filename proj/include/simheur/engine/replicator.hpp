#pragma once

#include <cstdint>
#include <vector>

#include "simheur/core/problem.hpp"
#include "simheur/core/rng.hpp"
#include "simheur/sched/schedule.hpp"

namespace simheur::engine {

/// Stream for replication `rep` of the solution with admission serial `serial`.
core::RngStream replication_stream(std::uint64_t seed, std::uint64_t serial, std::uint64_t rep) noexcept;

/// Runs replications of one solution, optionally on several worker threads.
/// Replication k always uses replication_stream(seed, serial, first + k) and
/// samples come back in replication order, so results do not depend on the
/// worker count.
class Replicator {
 public:
  Replicator(const core::Problem<sched::Schedule>& problem, std::uint64_t seed, unsigned threads = 1);

  std::vector<double> run(const sched::Schedule& solution, std::uint64_t serial, std::uint64_t first,
                          std::uint64_t count) const;

  std::uint64_t seed() const noexcept { return seed_; }
  unsigned threads() const noexcept { return threads_; }

 private:
  const core::Problem<sched::Schedule>* problem_;
  std::uint64_t seed_;
  unsigned threads_;
};

}  // namespace simheur::engine
