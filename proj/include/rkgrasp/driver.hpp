#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rkgrasp/core.hpp"
#include "rkgrasp/decoder.hpp"
#include "rkgrasp/evaluator.hpp"

namespace rkgrasp {

enum class Algorithm { GraspGrid, GraspNelderMead, GraspRvnd, MultiStart };

/// "rk-grasp-grid", "rk-grasp-nm", "rk-grasp-rvnd", "multi-start".
std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

struct SolverParams {
  Algorithm algorithm = Algorithm::GraspRvnd;
  double h_start = 0.125;
  double h_end = 0.00098;
  /// Seconds on the run clock. Unset means the decoder's natural size.
  std::optional<double> time_limit;
  std::optional<std::int64_t> max_decode_calls;
  ClockKind clock = ClockKind::ThreadCpu;
  std::uint64_t seed = 1;
  /// Stop as soon as the incumbent reaches this cost (e.g. a proven optimum).
  std::optional<double> target_cost;
  std::size_t elite_capacity = 10;

  /// Throws std::invalid_argument unless 0 < h_end <= h_start <= 1 and the
  /// clock/budget combination is usable.
  void validate() const;
};

/// Result of one run.
struct RunRecord {
  std::string instance;
  std::string algorithm;
  std::uint64_t seed = 0;
  double best_cost = kInfinity;
  RandomKeys best_keys;
  double time_to_best = 0.0;  ///< run-clock seconds when best_cost was found
  double elapsed = 0.0;       ///< run-clock seconds at the end of the run
  double wall_seconds = 0.0;  ///< real wall time
  std::int64_t decode_calls = 0;

  int restarts = 0;
  int grid_halvings = 0;
  int max_levels_per_restart = 0;    ///< grid levels visited by the longest restart
  std::vector<double> incumbent_trace;  ///< cost after every incumbent update
};

/// Simulated-annealing acceptance of a candidate against the current point:
/// always accepts delta <= 0, otherwise accepts with probability
/// exp(-delta / (run_time - elapsed)), the denominator floored at 1e-9.
bool accept(double candidate_cost, double current_cost, double elapsed, double run_time, Rng& rng);

double acceptance_probability(double delta, double elapsed, double run_time);

/// Number of grid levels h_start, h_start/2, ... that are >= h_end.
int grid_levels(double h_start, double h_end);

/// The RK-GRASP driver: restarts from a random point, alternates
/// semi-greedy construction and local search while halving the grid step
/// whenever the incumbent does not improve.
RunRecord rk_grasp(const Decoder& decoder, const SolverParams& params);

/// Baseline that decodes independent random points and keeps the best.
RunRecord multi_start(const Decoder& decoder, const SolverParams& params);

/// Dispatches on params.algorithm.
RunRecord solve(const Decoder& decoder, const SolverParams& params);

}  // namespace rkgrasp
