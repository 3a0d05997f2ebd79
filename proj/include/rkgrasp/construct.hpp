#pragma once

#include <optional>
#include <vector>

#include "rkgrasp/core.hpp"
#include "rkgrasp/evaluator.hpp"

namespace rkgrasp {

/// Best sampled value for one coordinate and the cost it decodes to.
struct LineSearchResult {
  double value = 0.0;
  double cost = kInfinity;
};

/// Grid values x_i + k*h, k = 0, +1, -1, +2, -2, ..., +-floor(1/h), that stay in [0,1).
std::vector<double> line_search_candidates(double key, double h);

/// Number of grid values probed by a line search, ceil(log2(1/h)) + 1.
int line_search_sample_size(double h);

/// Probes a random subset of the grid values of coordinate i, without
/// replacement, and returns the cheapest. x is not modified.
/// Throws std::invalid_argument unless 0 < h <= 1.
LineSearchResult line_search(const RandomKeys& x, double h, int i, Evaluator& eval, Rng& rng);

struct ConstructionTrace {
  int iterations = 0;
  int reused_scans = 0;             ///< scans served entirely from the cache
  std::vector<int> fix_order;       ///< coordinate fixed at each iteration
  std::vector<std::size_t> rcl_sizes;
};

/// Semi-greedy construction: repeatedly line-searches every unfixed
/// coordinate, builds the restricted candidate list with threshold
/// min + alpha*(max-min), and fixes one member drawn at random.
///
/// alpha is drawn once from UnifRand(0,1) unless given. Returns early with a
/// partially fixed vector when the evaluator is exhausted.
RandomKeys construct_greedy_randomized(const RandomKeys& x, double h, Evaluator& eval, Rng& rng,
                                       std::optional<double> alpha = std::nullopt,
                                       ConstructionTrace* trace = nullptr);

}  // namespace rkgrasp
