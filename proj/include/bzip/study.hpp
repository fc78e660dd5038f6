#pragma once

// Monte Carlo study harness: simulate, fit every requested method, and fold
// the per-replication table into bias / SD / RMSE summaries.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bzip/estimate.hpp"

namespace bzip {

struct ScenarioSpec {
  double lambda1 = 1.0;
  double lambda2 = 2.0;
  double theta = 0.25;
  double phi = 0.5;
  DependenceKind kind = DependenceKind::Positive;
  std::int64_t n = 100;
  int replications = 100;
  std::uint64_t base_seed = 1;
  std::vector<Method> methods{Method::MoM, Method::MLE1, Method::MLE2};

  void validate() const;
  ModelParams params() const;
  /// Short stable identifier, usable as a file stem.
  std::string id() const;
};

struct MethodOutcome {
  Method method = Method::MoM;
  bool ok = false;
  FitResult fit;
  std::string error;  // set when !ok
};

struct Replication {
  int index = 0;  // 1-based
  std::uint64_t seed = 0;
  bool excluded = false;  // a margin only took values in {0, 1}
  std::vector<MethodOutcome> outcomes;
};

struct ScenarioRun {
  ScenarioSpec spec;
  std::vector<Replication> replications;
};

/// Replication r simulates with seed base_seed ^ r. Replications run in
/// parallel; the table does not depend on scheduling.
ScenarioRun run_scenario(const ScenarioSpec& spec, const FitOptions& options = {});

struct CellSummary {
  Method method = Method::MoM;
  std::string parameter;  // lambda1, lambda2, theta, phi
  int used = 0;           // 0 marks an empty cell
  double truth = 0.0;
  double mean = 0.0;
  double bias = 0.0;
  double sd = 0.0;  // divisor used - 1; 0 for a single value
  double rmse = 0.0;
  double relative_rmse = 0.0;  // RMSE(MoM) / RMSE(method); NaN when undefined
};

struct AnomalyCounts {
  Method method = Method::MoM;
  int replications = 0;
  int excluded = 0;  // degenerate margins, shared by all methods
  int failed = 0;
  int theta_capped_0 = 0;
  int theta_capped_1 = 0;
  int phi_clamped = 0;
  int nonconverged = 0;
};

struct ScenarioReport {
  ScenarioSpec spec;
  std::vector<CellSummary> cells;
  std::vector<AnomalyCounts> anomalies;

  const CellSummary& cell(Method method, const std::string& parameter) const;
  const AnomalyCounts& anomaly(Method method) const;
};

ScenarioReport summarize(const ScenarioRun& run);

/// The 72-scenario design: n x Lambda x phi x theta x kind.
std::vector<ScenarioSpec> full_grid(int replications, std::uint64_t base_seed,
                                     const std::vector<Method>& methods = {Method::MoM, Method::MLE1,
                                                                           Method::MLE2});

void write_replications_csv(std::ostream& out, const ScenarioRun& run);
void write_report_csv(std::ostream& out, const std::vector<ScenarioReport>& reports);

}  // namespace bzip
