#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "simheur/sched/instance.hpp"

namespace simheur::sched {

/// An ordered assignment of every job to exactly one machine.
struct Schedule {
  std::vector<std::vector<JobId>> machine_sequences;

  std::size_t num_machines() const noexcept { return machine_sequences.size(); }
  std::size_t num_jobs() const noexcept;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Throws InvalidSchedule unless `schedule` partitions jobs 0..num_jobs-1 over
/// exactly `num_machines` machines.
void validate(const Schedule& schedule, std::size_t num_jobs, std::size_t num_machines);
bool is_valid(const Schedule& schedule, std::size_t num_jobs, std::size_t num_machines) noexcept;

/// "0 3|1 2": machines separated by '|', jobs by spaces.
std::string to_string(const Schedule& schedule);
Schedule schedule_from_string(const std::string& text);

/// Structure-only hash, stable across runs and platforms.
std::uint64_t hash_of(const Schedule& schedule) noexcept;

/// Jobs laid out contiguously with per-machine offsets, as consumed by the
/// batch evaluation kernels.
struct FlatSchedule {
  std::vector<JobId> jobs;
  std::vector<std::uint32_t> offsets;  // size num_machines + 1

  explicit FlatSchedule(const Schedule& schedule);
};

}  // namespace simheur::sched
