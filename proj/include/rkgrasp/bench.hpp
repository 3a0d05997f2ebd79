#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rkgrasp/decoder.hpp"
#include "rkgrasp/driver.hpp"

namespace rkgrasp {

/// Loads an instance file of the given problem ("tsp", "thlp", "stcp",
/// "ncgpp", "ssp") and wraps it in its decoder.
std::unique_ptr<Decoder> load_decoder(std::string_view problem, const std::filesystem::path& path);

struct BenchInstance {
  std::string name;
  std::shared_ptr<const Decoder> decoder;
  std::optional<double> bks;
};

struct ExperimentConfig {
  std::string problem;
  std::vector<std::filesystem::path> instances;
  std::vector<Algorithm> algorithms = {Algorithm::GraspRvnd};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  std::optional<double> time_limit;  ///< default: instance size in seconds
  std::optional<std::int64_t> decode_budget;
  SolverParams params;               ///< grid steps and other overrides
  std::map<std::string, double> bks;  ///< instance name -> best-known cost
  unsigned workers = 1;

  /// Reads key=value lines ('#' comments). Keys: problem, instances (comma
  /// separated, repeatable), algo, seeds, time-limit, decode-budget, hs, he,
  /// workers, clock, bks.<instance>. Throws std::runtime_error.
  static ExperimentConfig from_file(const std::filesystem::path& path);
};

struct ResultRow {
  std::string problem;
  std::string instance;
  RunRecord run;
  bool budget_mode = false;
  std::string error;  ///< non-empty when the run failed

  /// Seconds written to the wall_s column: virtual run-clock seconds in
  /// decode-budget mode, real wall time otherwise.
  double reported_wall() const { return budget_mode ? run.elapsed : run.wall_seconds; }
};

struct Aggregate {
  std::string instance;
  std::string algorithm;
  int runs = 0;
  double best = kInfinity;
  double average = kInfinity;
  double reference = kInfinity;  ///< BKS, or best over all algorithms when unknown
  double gap = 0.0;              ///< RPD of the best-of-seeds cost, percent
  double arpd = 0.0;             ///< mean per-run RPD, percent
  double mean_time_to_best = 0.0;
};

struct ResultTable {
  std::vector<ResultRow> rows;
  std::vector<Aggregate> aggregates;
};

/// Relative percentage deviation 100 * (found - bks) / bks.
/// Throws std::domain_error when bks <= 0.
double rpd(double found, double bks);

/// Per (instance, algorithm) aggregates over the rows. Instances without a
/// BKS use the best cost any algorithm reached as reference.
std::vector<Aggregate> aggregate(std::span<const ResultRow> rows, const std::map<std::string, double>& bks = {});

/// Runs every instance x algorithm x seed combination on `workers` threads.
/// Rows come back ordered by instance, algorithm and seed as given. A run
/// that throws becomes a row with a non-empty error.
ResultTable run_experiment(std::span<const BenchInstance> instances, std::span<const Algorithm> algorithms,
                           std::span<const std::uint64_t> seeds, const SolverParams& base, unsigned workers = 1);

/// Loads the instances named by config and runs them.
ResultTable run_experiment(const ExperimentConfig& config);

struct ProfilePoint {
  std::string algorithm;
  double tau = 1.0;
  double rho = 0.0;
};

struct PerformanceProfile {
  std::vector<std::string> instances;
  std::vector<std::string> algorithms;
  Eigen::MatrixXd ratios;  ///< instances x algorithms, +inf for failures
  std::vector<ProfilePoint> points;

  /// rho_a(tau) = |{i : r_ia <= tau}| / |I|.
  double rho(std::size_t algorithm, double tau) const;
};

/// Time-based performance profile over the aggregates. t_ia is the mean time
/// to best; an algorithm whose gap on i exceeds accuracy_pct gets t = +inf.
/// Every algorithm must cover the same instance set (std::invalid_argument).
PerformanceProfile performance_profile(std::span<const Aggregate> aggregates, double accuracy_pct = 1.0);

void emit_csv(const ResultTable& table, std::ostream& out);
void emit_csv(const ResultTable& table, const std::filesystem::path& path);
void emit_summary_csv(std::span<const Aggregate> aggregates, std::ostream& out);
void emit_profile_tsv(const PerformanceProfile& profile, std::ostream& out);
void emit_profile_tsv(const PerformanceProfile& profile, const std::filesystem::path& path);

/// Reads rows written by emit_csv.
std::vector<ResultRow> read_results_csv(const std::filesystem::path& path);

}  // namespace rkgrasp
