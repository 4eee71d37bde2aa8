#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace simheur::engine {

enum class EventKind {
  candidate_admitted,
  eoc_checked,
  ocba_round,
  phase_switch,
  finalize_started,
  returned,
};

std::string_view to_string(EventKind kind) noexcept;

struct TraceEvent {
  double budget_spent = 0.0;
  EventKind kind = EventKind::returned;
  std::vector<std::pair<std::string, std::string>> payload;

  std::optional<std::string_view> get(std::string_view key) const noexcept;
  /// Numeric payload value; throws std::out_of_range if missing.
  double number(std::string_view key) const;
};

/// Budget-stamped event log. Every event carries the cumulative `sim` and
/// `det` counters so spent budget can be reconstructed from the trace alone.
class RunTrace {
 public:
  using Field = std::pair<std::string, std::string>;

  void record(double budget_spent, EventKind kind, std::vector<Field> payload);

  const std::vector<TraceEvent>& events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  std::size_t count(EventKind kind) const noexcept;

  /// CSV with header `budget_spent,event_kind,payload`; payload is
  /// space-separated key=value pairs.
  void write_csv(std::ostream& os) const;
  std::string to_csv() const;

  friend bool operator==(const RunTrace&, const RunTrace&);

 private:
  std::vector<TraceEvent> events_;
};

bool operator==(const TraceEvent& a, const TraceEvent& b);

/// Shortest round-trip decimal text for a double.
std::string format_number(double value);

}  // namespace simheur::engine
