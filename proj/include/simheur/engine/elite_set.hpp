#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "simheur/sched/schedule.hpp"
#include "simheur/stats/belief.hpp"
#include "simheur/stats/sample_stats.hpp"

namespace simheur::engine {

struct EliteEntry {
  sched::Schedule schedule;
  double det_value = 0.0;
  stats::SampleStats stats;
  std::uint64_t serial = 0;  // unique per admission; keys the replication streams
};

/// How solutions without n0 replications are ranked against simulated ones.
enum class AdmissionRule {
  mixed,          // raw deterministic value against posterior means
  gap_corrected,  // deterministic value plus the elite's mean (posterior mean - det value) gap
};

struct AdmitResult {
  bool inserted = false;
  bool duplicate = false;
  std::optional<std::uint64_t> evicted_serial;
};

/// Fixed-capacity set of the most promising solutions, in admission order.
///
/// Eviction ranks entries by posterior mean once they have n0 replications and
/// by deterministic value before that, and compares the candidate's value
/// (its sample mean if it already carries n0 replications, else its
/// deterministic value) against the worst key. Under gap_corrected, every
/// deterministic value is first shifted by the average amount by which the
/// simulated entries' means exceed their deterministic values, so both sides
/// of each comparison estimate the same quantity. Statistics of an evicted
/// entry are discarded; a readmitted schedule starts over under a new serial.
class EliteSet {
 public:
  EliteSet(std::size_t capacity, std::uint64_t n0, AdmissionRule rule = AdmissionRule::mixed);

  AdmitResult admit(const sched::Schedule& candidate, double det_value,
                    const stats::SampleStats& candidate_stats = {},
                    std::optional<std::uint64_t> serial = std::nullopt);

  bool contains(const sched::Schedule& schedule) const noexcept;
  std::optional<std::size_t> find(const sched::Schedule& schedule) const noexcept;

  /// Ranking key used for eviction.
  double key(const EliteEntry& entry) const noexcept;
  /// Shift applied to deterministic values; 0 under `mixed` or before any
  /// entry has n0 replications.
  double jensen_gap() const noexcept;
  AdmissionRule rule() const noexcept { return rule_; }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t capacity() const noexcept { return capacity_; }
  std::uint64_t n0() const noexcept { return n0_; }

  const std::vector<EliteEntry>& entries() const noexcept { return entries_; }
  EliteEntry& entry(std::size_t i) { return entries_[i]; }

  /// Reserves a fresh serial without admitting anything.
  std::uint64_t next_serial() noexcept { return serial_counter_++; }

  /// Beliefs for entries with at least n0 replications, with their indices.
  std::vector<stats::Belief> beliefs(std::vector<std::size_t>* indices = nullptr) const;

 private:
  std::size_t capacity_;
  std::uint64_t n0_;
  AdmissionRule rule_;
  std::vector<EliteEntry> entries_;
  std::vector<std::uint64_t> hashes_;
  std::uint64_t serial_counter_ = 0;
};

}  // namespace simheur::engine
