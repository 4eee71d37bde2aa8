#include "simheur/bench/config_io.hpp"

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "simheur/core/errors.hpp"

namespace simheur::bench {

namespace {

std::size_t line_of(const YAML::Node& node) {
  return node.Mark().line >= 0 ? static_cast<std::size_t>(node.Mark().line) + 1 : 0;
}

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  template <class T>
  T get(const YAML::Node& node, const std::string& key) const {
    if (!node.IsScalar()) fail(node, key + ": expected a scalar");
    try {
      return node.as<T>();
    } catch (const YAML::Exception&) {
      fail(node, key + ": cannot convert '" + node.Scalar() + "'");
    }
  }

  [[noreturn]] void fail(const YAML::Node& node, const std::string& msg) const {
    throw ParseError(source_, line_of(node), msg);
  }

  using Handler = std::function<void(const YAML::Node&)>;

  void dispatch(const YAML::Node& map, const std::map<std::string, Handler>& handlers,
                const std::string& section) const {
    if (!map.IsMap()) fail(map, (section.empty() ? "config" : section) + " must be a mapping");
    for (auto it = map.begin(); it != map.end(); ++it) {
      const auto key = it->first.as<std::string>();
      const auto h = handlers.find(key);
      if (h == handlers.end())
        fail(it->first, "unknown key '" + (section.empty() ? key : section + "." + key) + "'");
      h->second(it->second);
    }
  }

 private:
  std::string source_;
};

}  // namespace

ConfigFile parse_config(std::string_view text, const std::string& source_name, const ConfigFile& base) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(source_name, static_cast<std::size_t>(e.mark.line) + 1, e.msg);
  }
  ConfigFile cfg = base;
  if (root.IsNull()) return cfg;

  const Reader rd(source_name);
  auto& rc = cfg.run;
  auto& gp = cfg.generator;
  using H = Reader::Handler;
  auto u64 = [&](std::uint64_t& dst, const char* key) -> H {
    return [&rd, &dst, key](const YAML::Node& n) {
      const auto v = rd.get<long long>(n, key);
      if (v < 0) rd.fail(n, std::string(key) + " must be nonnegative");
      dst = static_cast<std::uint64_t>(v);
    };
  };
  auto real = [&](double& dst, const char* key) -> H {
    return [&rd, &dst, key](const YAML::Node& n) { dst = rd.get<double>(n, key); };
  };

  const std::map<std::string, H> annealing{
      {"initial_temperature_fraction", real(rc.annealing.initial_temperature_fraction, "initial_temperature_fraction")},
      {"cooling", real(rc.annealing.cooling, "cooling")},
      {"stagnation_limit", u64(rc.annealing.stagnation_limit, "stagnation_limit")},
  };
  const std::map<std::string, H> generator{
      {"dur_lo", real(gp.dur_lo, "dur_lo")},
      {"dur_hi", real(gp.dur_hi, "dur_hi")},
      {"setup_lo", real(gp.setup_lo, "setup_lo")},
      {"setup_hi", real(gp.setup_hi, "setup_hi")},
      {"tardiness_factor", real(gp.tardiness_factor, "tardiness_factor")},
      {"due_date_range", real(gp.due_date_range, "due_date_range")},
      {"cv", real(gp.cv, "cv")},
      {"w_tardiness", real(gp.w_tardiness, "w_tardiness")},
      {"w_makespan", real(gp.w_makespan, "w_makespan")},
  };
  const std::map<std::string, H> top{
      {"strategy",
       [&](const YAML::Node& n) {
         const auto name = rd.get<std::string>(n, "strategy");
         const auto s = engine::parse_strategy(name);
         if (!s) rd.fail(n, "unknown strategy '" + name + "'");
         rc.strategy = *s;
       }},
      {"threshold_mode",
       [&](const YAML::Node& n) {
         const auto name = rd.get<std::string>(n, "threshold_mode");
         const auto m = engine::parse_threshold_mode(name);
         if (!m) rd.fail(n, "unknown threshold_mode '" + name + "'");
         rc.threshold_mode = *m;
       }},
      {"admission",
       [&](const YAML::Node& n) {
         const auto name = rd.get<std::string>(n, "admission");
         const auto a = engine::parse_admission_rule(name);
         if (!a) rd.fail(n, "unknown admission rule '" + name + "'");
         rc.admission = *a;
       }},
      {"search_sim_share", real(rc.search_sim_share, "search_sim_share")},
      {"total_budget", u64(rc.total_budget, "total_budget")},
      {"det_eval_cost", real(rc.det_eval_cost, "det_eval_cost")},
      {"finalize_fraction", real(rc.finalize_fraction, "finalize_fraction")},
      {"elite_capacity", u64(rc.elite_capacity, "elite_capacity")},
      {"eoc_threshold", real(rc.eoc_threshold, "eoc_threshold")},
      {"n0", u64(rc.n0, "n0")},
      {"ocba_delta", u64(rc.ocba_delta, "ocba_delta")},
      {"check_interval", u64(rc.check_interval, "check_interval")},
      {"max_det_evaluations", u64(rc.max_det_evaluations, "max_det_evaluations")},
      {"interval_det_evals", u64(rc.interval_det_evals, "interval_det_evals")},
      {"interval_reps", u64(rc.interval_reps, "interval_reps")},
      {"per_candidate_reps", u64(rc.per_candidate_reps, "per_candidate_reps")},
      {"promising_gap", real(rc.promising.relative_gap, "promising_gap")},
      {"threads",
       [&](const YAML::Node& n) {
         const auto v = rd.get<long long>(n, "threads");
         if (v < 1) rd.fail(n, "threads must be positive");
         rc.threads = static_cast<unsigned>(v);
       }},
      {"annealing", [&](const YAML::Node& n) { rd.dispatch(n, annealing, "annealing"); }},
      {"generator", [&](const YAML::Node& n) { rd.dispatch(n, generator, "generator"); }},
  };
  rd.dispatch(root, top, "");

  try {
    rc.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(source_name, 0, e.what());
  }
  return cfg;
}

ConfigFile load_config(const std::filesystem::path& path, const ConfigFile& base) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_config(buf.str(), path.string(), base);
}

std::string write_config(const ConfigFile& config) {
  const auto& rc = config.run;
  const auto& gp = config.generator;
  std::string out;
  out += fmt::format("strategy: {}\n", engine::to_string(rc.strategy));
  out += fmt::format("total_budget: {}\n", rc.total_budget);
  out += fmt::format("det_eval_cost: {}\n", rc.det_eval_cost);
  out += fmt::format("finalize_fraction: {}\n", rc.finalize_fraction);
  out += fmt::format("elite_capacity: {}\n", rc.elite_capacity);
  out += fmt::format("eoc_threshold: {}\n", rc.eoc_threshold);
  out += fmt::format("threshold_mode: {}\n", engine::to_string(rc.threshold_mode));
  out += fmt::format("n0: {}\n", rc.n0);
  out += fmt::format("ocba_delta: {}\n", rc.ocba_delta);
  out += fmt::format("admission: {}\n", engine::to_string(rc.admission));
  out += fmt::format("search_sim_share: {}\n", rc.search_sim_share);
  out += fmt::format("check_interval: {}\n", rc.check_interval);
  out += fmt::format("max_det_evaluations: {}\n", rc.max_det_evaluations);
  out += fmt::format("interval_det_evals: {}\n", rc.interval_det_evals);
  out += fmt::format("interval_reps: {}\n", rc.interval_reps);
  out += fmt::format("per_candidate_reps: {}\n", rc.per_candidate_reps);
  out += fmt::format("promising_gap: {}\n",
                     std::isinf(rc.promising.relative_gap) ? std::string(".inf") : fmt::format("{}", rc.promising.relative_gap));
  out += fmt::format("threads: {}\n", rc.threads);
  out += fmt::format("annealing: {{initial_temperature_fraction: {}, cooling: {}, stagnation_limit: {}}}\n",
                     rc.annealing.initial_temperature_fraction, rc.annealing.cooling,
                     rc.annealing.stagnation_limit);
  out += fmt::format(
      "generator: {{dur_lo: {}, dur_hi: {}, setup_lo: {}, setup_hi: {}, tardiness_factor: {}, "
      "due_date_range: {}, cv: {}, w_tardiness: {}, w_makespan: {}}}\n",
      gp.dur_lo, gp.dur_hi, gp.setup_lo, gp.setup_hi, gp.tardiness_factor, gp.due_date_range, gp.cv,
      gp.w_tardiness, gp.w_makespan);
  return out;
}

}  // namespace simheur::bench
