#include "simheur/sched/schedule.hpp"

#include <charconv>
#include <sstream>
#include <string_view>

#include "simheur/core/errors.hpp"
#include "simheur/core/rng.hpp"

namespace simheur::sched {

std::size_t Schedule::num_jobs() const noexcept {
  std::size_t n = 0;
  for (const auto& seq : machine_sequences) n += seq.size();
  return n;
}

namespace {

const char* partition_error(const Schedule& schedule, std::size_t num_jobs,
                            std::size_t num_machines, std::string& detail) {
  if (schedule.machine_sequences.size() != num_machines) {
    detail = std::to_string(schedule.machine_sequences.size()) + " machines, expected " +
             std::to_string(num_machines);
    return "wrong machine count";
  }
  std::vector<char> seen(num_jobs, 0);
  std::size_t count = 0;
  for (const auto& seq : schedule.machine_sequences) {
    for (JobId j : seq) {
      if (j >= num_jobs) {
        detail = "job " + std::to_string(j);
        return "job id out of range";
      }
      if (seen[j]) {
        detail = "job " + std::to_string(j);
        return "job scheduled twice";
      }
      seen[j] = 1;
      ++count;
    }
  }
  if (count != num_jobs) {
    detail = std::to_string(num_jobs - count) + " jobs missing";
    return "incomplete schedule";
  }
  return nullptr;
}

}  // namespace

void validate(const Schedule& schedule, std::size_t num_jobs, std::size_t num_machines) {
  std::string detail;
  if (const char* err = partition_error(schedule, num_jobs, num_machines, detail))
    throw InvalidSchedule(std::string(err) + ": " + detail);
}

bool is_valid(const Schedule& schedule, std::size_t num_jobs, std::size_t num_machines) noexcept {
  std::string detail;
  return partition_error(schedule, num_jobs, num_machines, detail) == nullptr;
}

std::string to_string(const Schedule& schedule) {
  std::string out;
  for (std::size_t m = 0; m < schedule.machine_sequences.size(); ++m) {
    if (m > 0) out += '|';
    const auto& seq = schedule.machine_sequences[m];
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(seq[k]);
    }
  }
  return out;
}

Schedule schedule_from_string(const std::string& text) {
  Schedule s;
  std::string_view rest = text;
  while (true) {
    const auto bar = rest.find('|');
    std::string_view part = rest.substr(0, bar);
    auto& seq = s.machine_sequences.emplace_back();
    std::size_t i = 0;
    while (i < part.size()) {
      while (i < part.size() && part[i] == ' ') ++i;
      if (i == part.size()) break;
      JobId v = 0;
      auto [ptr, ec] = std::from_chars(part.data() + i, part.data() + part.size(), v);
      if (ec != std::errc{}) throw InvalidSchedule("malformed schedule text: " + text);
      i = static_cast<std::size_t>(ptr - part.data());
      seq.push_back(v);
    }
    if (bar == std::string_view::npos) break;
    rest.remove_prefix(bar + 1);
  }
  return s;
}

std::uint64_t hash_of(const Schedule& schedule) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const auto& seq : schedule.machine_sequences) {
    h = core::mix64(h ^ 0xFFFFFFFFULL);
    for (JobId j : seq) h = core::mix64(h ^ j);
  }
  return h;
}

FlatSchedule::FlatSchedule(const Schedule& schedule) {
  offsets.reserve(schedule.machine_sequences.size() + 1);
  offsets.push_back(0);
  for (const auto& seq : schedule.machine_sequences) {
    jobs.insert(jobs.end(), seq.begin(), seq.end());
    offsets.push_back(static_cast<std::uint32_t>(jobs.size()));
  }
}

}  // namespace simheur::sched
