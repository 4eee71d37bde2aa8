#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "simheur/engine/run_config.hpp"
#include "simheur/sched/generator.hpp"

namespace simheur::bench {

// Run configuration files are YAML mappings whose keys mirror RunConfig:
//
//   strategy: ocba-guided
//   total_budget: 100000
//   eoc_threshold: 0.01
//   threshold_mode: relative
//   annealing: {cooling: 0.999, stagnation_limit: 2000}
//   generator: {cv: 0.5, tardiness_factor: 0.4}
//
// Keys not present keep the value from `base`. Unknown keys are an error.

struct ConfigFile {
  engine::RunConfig run;
  sched::GeneratorParams generator;
};

ConfigFile parse_config(std::string_view text, const std::string& source_name = "<string>",
                        const ConfigFile& base = {});
ConfigFile load_config(const std::filesystem::path& path, const ConfigFile& base = {});
std::string write_config(const ConfigFile& config);

}  // namespace simheur::bench
