#pragma once

#include <array>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "rkgrasp/core.hpp"
#include "rkgrasp/elite_pool.hpp"
#include "rkgrasp/evaluator.hpp"

namespace rkgrasp {

/// Farey sequence of order 7: 19 reduced fractions from 0/1 to 1/1.
std::span<const double, 19> farey_f7();

/// Grid size n * floor(1/h): the non-improving sample budget of grid search
/// and the iteration count of Nelder-Mead search.
long grid_points(int n, double h);

/// Random point of the h-neighborhood of xbar: integer grid offsets v
/// projected onto the radius-h sphere, each coordinate moved with
/// probability theta. When offsets is given it receives v.
RandomKeys h_neighborhood(const RandomKeys& xbar, double h, double theta, Rng& rng,
                          Eigen::VectorXd* offsets = nullptr);

/// First-improvement sampling of the h-neighborhood. Stops after more than
/// grid_points(n,h) consecutive non-improving samples. x.cost must be set.
Solution grid_search(const Solution& x, double h, double theta, Evaluator& eval, Rng& rng);

/// Same, with theta drawn from UnifRand(0.2, 0.4).
Solution grid_search(const Solution& x, double h, Evaluator& eval, Rng& rng);

/// Uniform crossover. Each key comes from a with probability 0.5, otherwise
/// from b (factor = +1) or from the clamped complement 1 - b (factor = -1).
RandomKeys ux_crossover(const RandomKeys& a, const RandomKeys& b, int factor, Rng& rng);

using Simplex = std::array<Solution, 3>;

/// Discrete Nelder-Mead over three points whose moves are built with
/// ux_crossover. Runs grid_points(n,h) iterations and returns the best vertex.
/// on_iteration, when set, sees the sorted simplex after each iteration.
Solution nelder_mead_search(const Solution& x1, const Solution& x2, const Solution& x3, double h,
                            Evaluator& eval, Rng& rng,
                            const std::function<void(const Simplex&)>& on_iteration = {});

/// Swaps pairs of keys; improving swaps are kept. Ends after a full cycle of
/// pairs without improvement.
Solution swap_rk(const Solution& x, Evaluator& eval, Rng& rng);

/// Replaces single keys by 1 - key; same acceptance and termination as swap_rk.
Solution invert_rk(const Solution& x, Evaluator& eval, Rng& rng);

/// Replaces single keys by a value drawn inside a random interval of F7.
Solution farey_rk(const Solution& x, Evaluator& eval, Rng& rng);

enum class Neighborhood { Grid, NelderMead, Swap, Invert, Farey };

std::string_view to_string(Neighborhood nb);

/// Nelder-Mead companions for x: two entries of the elite pool, or fresh
/// random points when the pool holds fewer than two.
std::array<Solution, 2> simplex_companions(const ElitePool& elite, Evaluator& eval, Rng& rng);

struct RvndTrace {
  int applications = 0;
  int restarts = 0;
  std::vector<int> sequence;  ///< index of the move applied at each step
  std::vector<bool> improved;
};

using NeighborhoodMove = std::function<Solution(const Solution&)>;

/// Generic random variable neighborhood descent: picks a random move from the
/// list, restores the full list on strict improvement and drops the move
/// otherwise. Returns when the list is empty or the evaluator is exhausted.
Solution rvnd(const Solution& x, std::span<const NeighborhoodMove> moves, Evaluator& eval, Rng& rng,
              RvndTrace* trace = nullptr);

/// RVND over Grid, NelderMead, Swap, Invert and Farey, in that list order.
Solution rvnd(const Solution& x, double h, Evaluator& eval, const ElitePool& elite, Rng& rng,
              RvndTrace* trace = nullptr);

/// Applies one neighborhood heuristic to x.
Solution apply_neighborhood(Neighborhood nb, const Solution& x, double h, Evaluator& eval,
                            const ElitePool& elite, Rng& rng);

}  // namespace rkgrasp
