#include "densekit/report.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

#include "densekit/error.hpp"

namespace densekit::report {

using json = nlohmann::ordered_json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json density_json(const DensityValue& d) {
  return json{{"numerator", d.numerator}, {"denominator", d.denominator}, {"value", d.value()}, {"exact", d.exact}};
}

DensityValue density_from(const json& j) {
  return {j.at("numerator").get<double>(), j.at("denominator").get<std::int64_t>(), j.at("exact").get<bool>()};
}

std::optional<DensityValue> optional_density(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return density_from(j.at(key));
}

json certificate_json(const DualCertificate& c) {
  return json{{"lower", density_json(c.lower)}, {"upper", density_json(c.upper)}, {"ratio", c.ratio}, {"iterations", c.iterations}};
}

DualCertificate certificate_from(const json& j) {
  return {density_from(j.at("lower")), density_from(j.at("upper")), j.at("ratio").get<double>(),
          j.at("iterations").get<std::int64_t>()};
}

std::string format_number(double v) {
  std::ostringstream out;
  out.precision(std::numeric_limits<double>::max_digits10);
  out << v;
  return out.str();
}

// Running-best density over optimum, both exact when possible.
double ratio_of(const DensityValue& a, const DensityValue& b) {
  if (same_density(a, b)) return 1.0;
  return a.value() / b.value();
}

}  // namespace

GraphInfo describe(const Graph& g, std::string source) {
  return {g.n(), g.m(), g.weighted(), g.is_signed(), std::move(source)};
}

json to_json(const ExperimentReport& r) {
  json j;
  j["schema"] = r.schema;
  j["command"] = r.command;
  j["graph"] = json{{"n", r.graph.n}, {"m", r.graph.m}, {"weighted", r.graph.weighted},
                    {"signed", r.graph.is_signed}, {"source", r.graph.source}};
  json config = json::object();
  for (const auto& [key, value] : r.config) config[key] = value;
  j["config"] = std::move(config);
  j["best_density"] = r.best_density ? density_json(*r.best_density) : json(nullptr);
  j["best_subset"] = r.best_subset;
  j["certificate"] = r.certificate ? certificate_json(*r.certificate) : json(nullptr);
  j["iterations_used"] = optional_json(r.iterations_used);

  json rows = json::array();
  for (const auto& row : r.convergence) {
    rows.push_back(json{{"iter", row.iter},
                        {"density", row.density},
                        {"accuracy", optional_json(row.accuracy)},
                        {"accuracy_kind", row.accuracy_kind},
                        {"dual_bound", row.dual_bound},
                        {"ms", optional_json(row.ms)}});
  }
  j["convergence"] = std::move(rows);

  json solvers = json::array();
  for (const auto& s : r.solvers) {
    solvers.push_back(json{{"solver", s.solver},
                           {"density", density_json(s.density)},
                           {"subset_size", s.subset_size},
                           {"ms", optional_json(s.ms)}});
  }
  j["solvers"] = std::move(solvers);

  if (r.mwu) {
    const auto& m = *r.mwu;
    j["mwu"] = json{{"average_value", m.average_value}, {"max_load", m.max_load}, {"rounds", m.rounds},
                    {"eta", m.eta}, {"width", m.width}, {"eps", m.eps}};
  } else {
    j["mwu"] = nullptr;
  }

  if (r.bench) {
    const auto& b = *r.bench;
    j["bench"] = json{{"optimum", b.optimum ? density_json(*b.optimum) : json(nullptr)},
                      {"iterations_run", b.iterations_run},
                      {"iterations_to_90", optional_json(b.iterations_to_90)},
                      {"iterations_to_99", optional_json(b.iterations_to_99)},
                      {"iterations_to_optimum", optional_json(b.iterations_to_optimum)},
                      {"below_timer_resolution", b.below_timer_resolution},
                      {"exact_ms", optional_json(b.exact_ms)},
                      {"greedy_ms", optional_json(b.greedy_ms)},
                      {"speedup", optional_json(b.speedup)},
                      {"certificate_ratio", optional_json(b.certificate_ratio)}};
  } else {
    j["bench"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

ExperimentReport from_json(const json& j) {
  ExperimentReport r;
  r.schema = j.at("schema").get<std::string>();
  if (r.schema != kSchema) throw InputError("unsupported report schema '" + r.schema + "'");
  r.command = j.at("command").get<std::string>();
  const auto& g = j.at("graph");
  r.graph = {g.at("n").get<std::int64_t>(), g.at("m").get<std::int64_t>(), g.at("weighted").get<bool>(),
             g.at("signed").get<bool>(), g.at("source").get<std::string>()};
  for (const auto& [key, value] : j.at("config").items()) r.config.emplace_back(key, value.get<std::string>());
  r.best_density = optional_density(j, "best_density");
  r.best_subset = j.at("best_subset").get<std::vector<std::string>>();
  if (!j.at("certificate").is_null()) r.certificate = certificate_from(j.at("certificate"));
  r.iterations_used = optional_from<std::int64_t>(j, "iterations_used");

  for (const auto& row : j.at("convergence")) {
    r.convergence.push_back({row.at("iter").get<std::int64_t>(), row.at("density").get<double>(),
                             optional_from<double>(row, "accuracy"), row.at("accuracy_kind").get<std::string>(),
                             row.at("dual_bound").get<double>(), optional_from<double>(row, "ms")});
  }
  for (const auto& s : j.at("solvers")) {
    r.solvers.push_back({s.at("solver").get<std::string>(), density_from(s.at("density")),
                         s.at("subset_size").get<std::int64_t>(), optional_from<double>(s, "ms")});
  }
  if (!j.at("mwu").is_null()) {
    const auto& m = j.at("mwu");
    r.mwu = MwuSummary{m.at("average_value").get<double>(), m.at("max_load").get<double>(),
                       m.at("rounds").get<std::int64_t>(), m.at("eta").get<double>(),
                       m.at("width").get<double>(), m.at("eps").get<double>()};
  }
  if (!j.at("bench").is_null()) {
    const auto& b = j.at("bench");
    BenchSummary s;
    s.optimum = optional_density(b, "optimum");
    s.iterations_run = b.at("iterations_run").get<std::int64_t>();
    s.iterations_to_90 = optional_from<std::int64_t>(b, "iterations_to_90");
    s.iterations_to_99 = optional_from<std::int64_t>(b, "iterations_to_99");
    s.iterations_to_optimum = optional_from<std::int64_t>(b, "iterations_to_optimum");
    s.below_timer_resolution = b.at("below_timer_resolution").get<bool>();
    s.exact_ms = optional_from<double>(b, "exact_ms");
    s.greedy_ms = optional_from<double>(b, "greedy_ms");
    s.speedup = optional_from<double>(b, "speedup");
    s.certificate_ratio = optional_from<double>(b, "certificate_ratio");
    r.bench = s;
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string emit_json(const ExperimentReport& report) { return to_json(report).dump(2) + "\n"; }

ExperimentReport parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid report JSON: ") + e.what());
  }
  try {
    return from_json(j);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string emit_csv(const ExperimentReport& report) {
  std::ostringstream out;
  if (!report.convergence.empty()) {
    out << "iter,density,accuracy,dual_bound,ms\n";
    for (const auto& row : report.convergence) {
      out << row.iter << ',' << format_number(row.density) << ','
          << (row.accuracy ? format_number(*row.accuracy) : "") << ',' << format_number(row.dual_bound) << ','
          << (row.ms ? format_number(*row.ms) : "") << '\n';
    }
    return out.str();
  }
  if (report.mwu) {
    const auto& m = *report.mwu;
    out << "rounds,average_value,max_load,eta\n";
    out << m.rounds << ',' << format_number(m.average_value) << ',' << format_number(m.max_load) << ','
        << format_number(m.eta) << '\n';
    return out.str();
  }
  out << "solver,density,subset_size,ms\n";
  for (const auto& s : report.solvers) {
    out << s.solver << ',' << format_number(s.density.value()) << ',' << s.subset_size << ','
        << (s.ms ? format_number(*s.ms) : "") << '\n';
  }
  return out.str();
}

namespace {

struct RowBuilder {
  const std::optional<DensityValue>& optimum;
  bool certificates;
  std::optional<DensityValue> tightest;

  ConvergenceRow build(const IterationSummary& s) {
    ConvergenceRow row;
    row.iter = s.iteration;
    row.density = s.running_best.value();
    const DensityValue upper{s.max_load, s.iteration, s.running_best.exact};
    row.dual_bound = upper.value();
    if (optimum) {
      row.accuracy = ratio_of(s.running_best, *optimum);
      row.accuracy_kind = "exact";
    } else if (certificates) {
      if (!tightest || denser(*tightest, upper)) tightest = upper;
      row.accuracy = std::min(1.0, ratio_of(s.running_best, *tightest));
      row.accuracy_kind = "certified_lower_bound";
    } else {
      row.accuracy_kind = "unavailable";
    }
    return row;
  }
};

}  // namespace

std::vector<ConvergenceRow> rows_from_run(const GreedyPPResult& run, const std::optional<DensityValue>& optimum,
                                          bool certificates) {
  RowBuilder builder{optimum, certificates, std::nullopt};
  std::vector<ConvergenceRow> rows;
  for (const auto& s : run.per_iteration) rows.push_back(builder.build(s));
  return rows;
}

std::vector<ConvergenceRow> convergence_report(const Graph& g, std::int64_t iterations,
                                               const std::optional<DensityValue>& optimum,
                                               const ConvergenceOptions& options) {
  RowBuilder builder{optimum, !g.is_signed(), std::nullopt};
  std::vector<ConvergenceRow> rows;
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  GreedyPPOptions run_options;
  run_options.tracker = options.tracker;
  run_options.observer = [&](const IterationSummary& s, const LoadVector&) {
    const auto now = clock::now();
    auto row = builder.build(s);
    if (options.timing) row.ms = std::chrono::duration<double, std::milli>(now - start).count();
    rows.push_back(std::move(row));
    return true;
  };
  greedy_pp(g, iterations, run_options);
  return rows;
}

}  // namespace densekit::report
