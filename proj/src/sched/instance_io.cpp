#include "simheur/sched/instance_io.hpp"

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "simheur/core/errors.hpp"

namespace simheur::sched {

std::string write_instance(const Instance& instance) {
  const std::size_t n = instance.num_jobs();
  std::string out = "# simheur instance\n";
  out += fmt::format("num_machines: {}\n", instance.num_machines());
  out += fmt::format("w_tardiness: {}\n", instance.w_tardiness());
  out += fmt::format("w_makespan: {}\n", instance.w_makespan());
  out += "jobs:\n";
  for (const Job& job : instance.jobs())
    out += fmt::format("  - {{id: {}, mean_duration: {}, cv: {}, due_date: {}}}\n", job.id,
                       job.mean_duration, job.cv, job.due_date);
  out += "setup:\n";
  const auto setup = instance.setup_matrix();
  for (std::size_t row = 0; row <= n; ++row) {
    out += "  - [";
    for (std::size_t col = 0; col < n; ++col) {
      if (col > 0) out += ", ";
      out += fmt::format("{}", setup[row * n + col]);
    }
    out += "]\n";
  }
  return out;
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  os << write_instance(instance);
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

namespace {

std::size_t line_of(const YAML::Node& node) {
  const auto mark = node.Mark();
  return mark.line >= 0 ? static_cast<std::size_t>(mark.line) + 1 : 0;
}

template <class T>
T scalar(const YAML::Node& node, const char* what, const std::string& source) {
  if (!node.IsScalar()) throw ParseError(source, line_of(node), std::string(what) + ": expected a scalar");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ParseError(source, line_of(node),
                     std::string(what) + ": cannot convert '" + node.Scalar() + "'");
  }
}

YAML::Node required(const YAML::Node& parent, const char* key, const std::string& source) {
  const YAML::Node node = parent[key];
  if (!node) throw ParseError(source, line_of(parent), std::string("missing key '") + key + "'");
  return node;
}

}  // namespace

Instance parse_instance(std::string_view text, const std::string& source_name) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(source_name, static_cast<std::size_t>(e.mark.line) + 1, e.msg);
  }
  if (!root.IsMap()) throw ParseError(source_name, 1, "instance document must be a mapping");

  const auto num_machines =
      scalar<long long>(required(root, "num_machines", source_name), "num_machines", source_name);
  if (num_machines < 1)
    throw ParseError(source_name, line_of(root["num_machines"]), "num_machines must be positive");
  const double w_t = scalar<double>(required(root, "w_tardiness", source_name), "w_tardiness", source_name);
  const double w_m = scalar<double>(required(root, "w_makespan", source_name), "w_makespan", source_name);

  const YAML::Node jobs_node = required(root, "jobs", source_name);
  if (!jobs_node.IsSequence() || jobs_node.size() == 0)
    throw ParseError(source_name, line_of(jobs_node), "jobs must be a nonempty list");
  std::vector<Job> jobs;
  for (std::size_t k = 0; k < jobs_node.size(); ++k) {
    const YAML::Node rec = jobs_node[k];
    if (!rec.IsMap()) throw ParseError(source_name, line_of(rec), "job record must be a mapping");
    Job job;
    const auto id = scalar<long long>(required(rec, "id", source_name), "id", source_name);
    if (id != static_cast<long long>(k))
      throw ParseError(source_name, line_of(rec),
                       fmt::format("job ids must be 0..{} in order; found {} at position {}",
                                   jobs_node.size() - 1, id, k));
    job.id = static_cast<JobId>(id);
    job.mean_duration = scalar<double>(required(rec, "mean_duration", source_name), "mean_duration", source_name);
    job.cv = scalar<double>(required(rec, "cv", source_name), "cv", source_name);
    job.due_date = scalar<double>(required(rec, "due_date", source_name), "due_date", source_name);
    if (!(job.mean_duration > 0.0))
      throw ParseError(source_name, line_of(rec), "mean_duration must be positive");
    if (!(job.cv >= 0.0)) throw ParseError(source_name, line_of(rec), "cv must be nonnegative");
    jobs.push_back(job);
  }

  const std::size_t n = jobs.size();
  const YAML::Node setup_node = required(root, "setup", source_name);
  if (!setup_node.IsSequence())
    throw ParseError(source_name, line_of(setup_node), "setup must be a list of rows");
  if (setup_node.size() != n + 1)
    throw ParseError(source_name, line_of(setup_node),
                     fmt::format("setup has {} rows, expected num_jobs + 1 = {}", setup_node.size(), n + 1));
  std::vector<double> setup;
  setup.reserve((n + 1) * n);
  for (std::size_t row = 0; row <= n; ++row) {
    const YAML::Node r = setup_node[row];
    if (!r.IsSequence() || r.size() != n)
      throw ParseError(source_name, line_of(r),
                       fmt::format("setup row {} has {} entries, expected {}", row,
                                   r.IsSequence() ? r.size() : 0, n));
    for (std::size_t col = 0; col < n; ++col) {
      const double v = scalar<double>(r[col], "setup entry", source_name);
      if (!(v >= 0.0)) throw ParseError(source_name, line_of(r[col]), "setup entries must be nonnegative");
      setup.push_back(v);
    }
  }

  try {
    return Instance(std::move(jobs), static_cast<std::size_t>(num_machines), std::move(setup), w_t, w_m);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source_name, 1, e.what());
  }
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open instance file: " + path.string());
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_instance(buf.str(), path.string());
}

}  // namespace simheur::sched
