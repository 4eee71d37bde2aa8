#include "simheur/engine/trace.hpp"

#include <fmt/format.h>

#include <sstream>
#include <stdexcept>

namespace simheur::engine {

std::string_view to_string(EventKind kind) noexcept {
  switch (kind) {
    case EventKind::candidate_admitted: return "candidate_admitted";
    case EventKind::eoc_checked: return "eoc_checked";
    case EventKind::ocba_round: return "ocba_round";
    case EventKind::phase_switch: return "phase_switch";
    case EventKind::finalize_started: return "finalize_started";
    case EventKind::returned: return "returned";
  }
  return "unknown";
}

std::string format_number(double value) { return fmt::format("{}", value); }

std::optional<std::string_view> TraceEvent::get(std::string_view key) const noexcept {
  for (const auto& [k, v] : payload)
    if (k == key) return std::string_view(v);
  return std::nullopt;
}

double TraceEvent::number(std::string_view key) const {
  const auto v = get(key);
  if (!v) throw std::out_of_range("trace event has no field '" + std::string(key) + "'");
  return std::stod(std::string(*v));
}

void RunTrace::record(double budget_spent, EventKind kind, std::vector<Field> payload) {
  events_.push_back(TraceEvent{budget_spent, kind, std::move(payload)});
}

std::size_t RunTrace::count(EventKind kind) const noexcept {
  std::size_t c = 0;
  for (const auto& e : events_) c += e.kind == kind ? 1 : 0;
  return c;
}

void RunTrace::write_csv(std::ostream& os) const {
  os << "budget_spent,event_kind,payload\n";
  for (const auto& e : events_) {
    os << format_number(e.budget_spent) << ',' << to_string(e.kind) << ',';
    for (std::size_t i = 0; i < e.payload.size(); ++i) {
      if (i > 0) os << ' ';
      os << e.payload[i].first << '=' << e.payload[i].second;
    }
    os << '\n';
  }
}

std::string RunTrace::to_csv() const {
  std::ostringstream os;
  write_csv(os);
  return os.str();
}

bool operator==(const TraceEvent& a, const TraceEvent& b) {
  return a.budget_spent == b.budget_spent && a.kind == b.kind && a.payload == b.payload;
}

bool operator==(const RunTrace& a, const RunTrace& b) { return a.events_ == b.events_; }

}  // namespace simheur::engine
