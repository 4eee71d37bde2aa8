#include "simheur/engine/elite_set.hpp"

#include <stdexcept>

namespace simheur::engine {

EliteSet::EliteSet(std::size_t capacity, std::uint64_t n0, AdmissionRule rule)
    : capacity_(capacity), n0_(n0), rule_(rule) {
  if (capacity == 0) throw std::invalid_argument("elite capacity must be positive");
  if (n0 == 0) throw std::invalid_argument("n0 must be positive");
}

std::optional<std::size_t> EliteSet::find(const sched::Schedule& schedule) const noexcept {
  const std::uint64_t h = sched::hash_of(schedule);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (hashes_[i] == h && entries_[i].schedule == schedule) return i;
  return std::nullopt;
}

bool EliteSet::contains(const sched::Schedule& schedule) const noexcept {
  return find(schedule).has_value();
}

double EliteSet::jensen_gap() const noexcept {
  if (rule_ == AdmissionRule::mixed) return 0.0;
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& e : entries_)
    if (e.stats.n >= n0_) {
      sum += e.stats.mean - e.det_value;
      ++count;
    }
  return count > 0 ? sum / static_cast<double>(count) : 0.0;
}

double EliteSet::key(const EliteEntry& entry) const noexcept {
  return entry.stats.n >= n0_ ? entry.stats.mean : entry.det_value + jensen_gap();
}

AdmitResult EliteSet::admit(const sched::Schedule& candidate, double det_value,
                            const stats::SampleStats& candidate_stats,
                            std::optional<std::uint64_t> serial) {
  AdmitResult result;
  if (contains(candidate)) {
    result.duplicate = true;
    return result;
  }

  if (entries_.size() >= capacity_) {
    const double gap = jensen_gap();
    auto key_of = [&](const EliteEntry& e) { return e.stats.n >= n0_ ? e.stats.mean : e.det_value + gap; };
    std::size_t worst = 0;
    for (std::size_t i = 1; i < entries_.size(); ++i)
      if (key_of(entries_[i]) > key_of(entries_[worst])) worst = i;
    const double candidate_key = candidate_stats.n >= n0_ ? candidate_stats.mean : det_value + gap;
    if (!(candidate_key < key_of(entries_[worst]))) return result;
    result.evicted_serial = entries_[worst].serial;
    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(worst));
    hashes_.erase(hashes_.begin() + static_cast<std::ptrdiff_t>(worst));
  }

  entries_.push_back(EliteEntry{candidate, det_value, candidate_stats,
                                serial ? *serial : next_serial()});
  hashes_.push_back(sched::hash_of(candidate));
  result.inserted = true;
  return result;
}

std::vector<stats::Belief> EliteSet::beliefs(std::vector<std::size_t>* indices) const {
  std::vector<stats::Belief> out;
  if (indices) indices->clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].stats.n < n0_) continue;
    out.push_back(stats::make_belief(entries_[i].stats, n0_));
    if (indices) indices->push_back(i);
  }
  return out;
}

}  // namespace simheur::engine
