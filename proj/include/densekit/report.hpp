#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "densekit/dual_cert.hpp"
#include "densekit/graph.hpp"
#include "densekit/peeling.hpp"

namespace densekit::report {

inline constexpr std::string_view kSchema = "densekit.report/1";

struct GraphInfo {
  std::int64_t n = 0;
  std::int64_t m = 0;
  bool weighted = false;
  bool is_signed = false;
  std::string source;

  friend bool operator==(const GraphInfo&, const GraphInfo&) = default;
};

GraphInfo describe(const Graph& g, std::string source);

// One Greedy++ iteration. `accuracy` is density / optimum when the optimum is
// known ("exact"); otherwise it is the certified lower bound running best /
// smallest dual bound so far ("certified_lower_bound").
struct ConvergenceRow {
  std::int64_t iter = 0;
  double density = 0.0;
  std::optional<double> accuracy;
  std::string accuracy_kind;
  double dual_bound = 0.0;
  std::optional<double> ms;  // cumulative solver time

  friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

struct SolverRun {
  std::string solver;
  DensityValue density;
  std::int64_t subset_size = 0;
  std::optional<double> ms;

  friend bool operator==(const SolverRun&, const SolverRun&) = default;
};

struct MwuSummary {
  double average_value = 0.0;
  double max_load = 0.0;
  std::int64_t rounds = 0;
  double eta = 0.0;
  double width = 0.0;
  double eps = 0.0;

  friend bool operator==(const MwuSummary&, const MwuSummary&) = default;
};

struct BenchSummary {
  std::optional<DensityValue> optimum;
  std::int64_t iterations_run = 0;
  std::optional<std::int64_t> iterations_to_90;
  std::optional<std::int64_t> iterations_to_99;
  std::optional<std::int64_t> iterations_to_optimum;
  bool below_timer_resolution = false;
  std::optional<double> exact_ms;   // median
  std::optional<double> greedy_ms;  // median time until 90% of the optimum
  std::optional<double> speedup;
  std::optional<double> certificate_ratio;  // reported when no optimum is available

  friend bool operator==(const BenchSummary&, const BenchSummary&) = default;
};

struct ExperimentReport {
  std::string schema{kSchema};
  std::string command;
  GraphInfo graph;
  std::vector<std::pair<std::string, std::string>> config;
  std::optional<DensityValue> best_density;
  std::vector<std::string> best_subset;
  std::optional<DualCertificate> certificate;
  std::optional<std::int64_t> iterations_used;
  std::vector<ConvergenceRow> convergence;
  std::vector<SolverRun> solvers;
  std::optional<MwuSummary> mwu;
  std::optional<BenchSummary> bench;
  std::vector<std::string> notes;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

nlohmann::ordered_json to_json(const ExperimentReport& report);
ExperimentReport from_json(const nlohmann::ordered_json& j);

std::string emit_json(const ExperimentReport& report);
ExperimentReport parse_json(std::string_view text);

// Convergence rows as "iter,density,accuracy,dual_bound,ms"; reports without
// rows fall back to one line per solver run.
std::string emit_csv(const ExperimentReport& report);

struct ConvergenceOptions {
  MinTracker tracker = MinTracker::automatic;
  bool timing = false;
};

std::vector<ConvergenceRow> convergence_report(const Graph& g, std::int64_t iterations,
                                               const std::optional<DensityValue>& optimum,
                                               const ConvergenceOptions& options = {});

// Rows from an already finished run (no timing). Pass certificates = false
// for signed graphs, where load bounds do not bound the optimum.
std::vector<ConvergenceRow> rows_from_run(const GreedyPPResult& run,
                                          const std::optional<DensityValue>& optimum,
                                          bool certificates = true);

}  // namespace densekit::report
