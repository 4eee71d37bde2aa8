#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "simheur/sched/instance.hpp"

namespace simheur::sched {

// Instance files are YAML documents; see docs/file-formats.md:
//
//   num_machines: 2
//   w_tardiness: 1
//   w_makespan: 0.1
//   jobs:
//     - {id: 0, mean_duration: 3, cv: 0.5, due_date: 5}
//     - {id: 1, mean_duration: 4, cv: 0.5, due_date: 6}
//   setup:          # num_jobs + 1 rows; row 0 is from an idle machine
//     - [0, 0]
//     - [0, 1]
//     - [1, 0]

/// Byte-stable text: numbers use the shortest round-trip representation.
std::string write_instance(const Instance& instance);
void save_instance(const Instance& instance, const std::filesystem::path& path);

/// Throws ParseError carrying `source_name` and the offending line.
Instance parse_instance(std::string_view text, const std::string& source_name = "<string>");
Instance load_instance(const std::filesystem::path& path);

}  // namespace simheur::sched
