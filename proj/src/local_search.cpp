#include "rkgrasp/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rkgrasp {

namespace {

constexpr std::array<double, 19> kFarey7 = {
    0.0,       1.0 / 7.0, 1.0 / 6.0, 1.0 / 5.0, 1.0 / 4.0, 2.0 / 7.0, 1.0 / 3.0,
    2.0 / 5.0, 3.0 / 7.0, 1.0 / 2.0, 4.0 / 7.0, 3.0 / 5.0, 2.0 / 3.0, 5.0 / 7.0,
    3.0 / 4.0, 4.0 / 5.0, 5.0 / 6.0, 6.0 / 7.0, 1.0};

// Offset magnitude ceil(UnifRand(1, m)); an empty range (m < 1) yields 1.
double grid_offset(double m, Rng& rng) {
  if (!(m > 1.0)) return 1.0;
  return std::max(1.0, std::ceil(rng.uniform(1.0, m)));
}

std::vector<int> random_order(int n, Rng& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span<int>(order));
  return order;
}

// Cyclic first-improvement over `moves` candidate moves. try_move(k, cur)
// applies move k to cur and returns true when it improved (keeping it) or
// false after restoring cur. Stops after `moves` consecutive failures.
template <typename TryMove>
Solution cyclic_first_improvement(const Solution& x, long moves, Evaluator& eval, TryMove&& try_move) {
  Solution cur = x;
  long since = 0;
  long k = 0;
  while (since < moves && !eval.exhausted()) {
    if (try_move(k, cur))
      since = 0;
    else
      ++since;
    k = (k + 1) % moves;
  }
  return cur;
}

void sort_simplex(Simplex& s) {
  std::stable_sort(s.begin(), s.end(), [](const Solution& a, const Solution& b) { return a.cost < b.cost; });
}

}  // namespace

std::span<const double, 19> farey_f7() { return std::span<const double, 19>(kFarey7); }

long grid_points(int n, double h) {
  if (!(h > 0.0 && h <= 1.0)) throw std::invalid_argument("grid step h must be in (0,1]");
  return static_cast<long>(n) * static_cast<long>(std::floor(1.0 / h));
}

RandomKeys h_neighborhood(const RandomKeys& xbar, double h, double theta, Rng& rng,
                          Eigen::VectorXd* offsets) {
  const Eigen::Index n = xbar.size();
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (rng.uniform() < 0.5)
      v[i] = grid_offset((1.0 - xbar[i]) / h, rng);
    else
      v[i] = -grid_offset(xbar[i] / h, rng);
  }
  const double norm = v.norm();

  RandomKeys y = xbar;
  for (Eigen::Index i = 0; i < n; ++i)
    if (rng.uniform() < theta) y[i] = clamp_key(xbar[i] + h * v[i] / norm);
  if (offsets) *offsets = std::move(v);
  return y;
}

Solution grid_search(const Solution& x, double h, double theta, Evaluator& eval, Rng& rng) {
  const long budget = grid_points(static_cast<int>(x.keys.size()), h);
  Solution best = x;
  long examined = 0;
  while (examined <= budget && !eval.exhausted()) {
    ++examined;
    RandomKeys y = h_neighborhood(best.keys, h, theta, rng);
    const double cost = eval(y);
    if (cost < best.cost) {
      best = {std::move(y), cost};
      examined = 0;
    }
  }
  return best;
}

Solution grid_search(const Solution& x, double h, Evaluator& eval, Rng& rng) {
  const double theta = rng.uniform(0.2, 0.4);
  return grid_search(x, h, theta, eval, rng);
}

RandomKeys ux_crossover(const RandomKeys& a, const RandomKeys& b, int factor, Rng& rng) {
  if (a.size() != b.size()) throw std::invalid_argument("ux_crossover: dimension mismatch");
  if (factor != 1 && factor != -1) throw std::invalid_argument("ux_crossover: factor must be +1 or -1");
  RandomKeys child(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (rng.uniform() < 0.5)
      child[i] = a[i];
    else
      child[i] = factor == 1 ? b[i] : clamp_key(1.0 - b[i]);
  }
  return child;
}

Solution nelder_mead_search(const Solution& x1, const Solution& x2, const Solution& x3, double h,
                            Evaluator& eval, Rng& rng,
                            const std::function<void(const Simplex&)>& on_iteration) {
  Simplex s = {x1, x2, x3};
  sort_simplex(s);
  RandomKeys centroid = ux_crossover(s[0].keys, s[1].keys, 1, rng);
  const long iterations = grid_points(static_cast<int>(x1.keys.size()), h);

  auto evaluated = [&](RandomKeys keys) {
    const double c = eval(keys);
    return Solution{std::move(keys), c};
  };

  for (long iter = 0; iter < iterations && !eval.exhausted(); ++iter) {
    bool shrink = false;
    Solution reflected = evaluated(ux_crossover(centroid, s[2].keys, -1, rng));
    if (reflected.cost < s[0].cost) {
      Solution expanded = evaluated(ux_crossover(reflected.keys, centroid, -1, rng));
      s[2] = expanded.cost < reflected.cost ? std::move(expanded) : std::move(reflected);
    } else if (reflected.cost < s[1].cost) {
      s[2] = std::move(reflected);
    } else if (reflected.cost < s[2].cost) {
      // outside contraction
      Solution contracted = evaluated(ux_crossover(reflected.keys, centroid, 1, rng));
      if (contracted.cost < reflected.cost)
        s[2] = std::move(contracted);
      else
        shrink = true;
    } else {
      // inside contraction
      Solution contracted = evaluated(ux_crossover(centroid, s[2].keys, 1, rng));
      if (contracted.cost < s[2].cost)
        s[2] = std::move(contracted);
      else
        shrink = true;
    }
    if (shrink) {
      s[1] = evaluated(ux_crossover(s[0].keys, s[1].keys, 1, rng));
      s[2] = evaluated(ux_crossover(s[0].keys, s[2].keys, 1, rng));
    }
    sort_simplex(s);
    centroid = ux_crossover(s[0].keys, s[1].keys, 1, rng);
    if (on_iteration) on_iteration(s);
  }
  return s[0];
}

Solution swap_rk(const Solution& x, Evaluator& eval, Rng& rng) {
  const auto n = static_cast<int>(x.keys.size());
  if (n < 2) return x;
  const std::vector<int> order = random_order(n, rng);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(order[a], order[b]);

  return cyclic_first_improvement(x, static_cast<long>(pairs.size()), eval, [&](long k, Solution& cur) {
    const auto [i, j] = pairs[k];
    std::swap(cur.keys[i], cur.keys[j]);
    const double c = eval(cur.keys);
    if (c < cur.cost) {
      cur.cost = c;
      return true;
    }
    std::swap(cur.keys[i], cur.keys[j]);
    return false;
  });
}

Solution invert_rk(const Solution& x, Evaluator& eval, Rng& rng) {
  const auto n = static_cast<int>(x.keys.size());
  const std::vector<int> order = random_order(n, rng);
  return cyclic_first_improvement(x, n, eval, [&](long k, Solution& cur) {
    const int i = order[k];
    const double old = cur.keys[i];
    cur.keys[i] = clamp_key(1.0 - old);
    const double c = eval(cur.keys);
    if (c < cur.cost) {
      cur.cost = c;
      return true;
    }
    cur.keys[i] = old;
    return false;
  });
}

Solution farey_rk(const Solution& x, Evaluator& eval, Rng& rng) {
  const auto n = static_cast<int>(x.keys.size());
  const std::vector<int> order = random_order(n, rng);
  return cyclic_first_improvement(x, n, eval, [&](long k, Solution& cur) {
    const int i = order[k];
    const auto j = static_cast<std::size_t>(rng.below(kFarey7.size() - 1));
    const double old = cur.keys[i];
    cur.keys[i] = clamp_key(rng.uniform(kFarey7[j], kFarey7[j + 1]));
    const double c = eval(cur.keys);
    if (c < cur.cost) {
      cur.cost = c;
      return true;
    }
    cur.keys[i] = old;
    return false;
  });
}

std::string_view to_string(Neighborhood nb) {
  switch (nb) {
    case Neighborhood::Grid: return "grid";
    case Neighborhood::NelderMead: return "nelder-mead";
    case Neighborhood::Swap: return "swap-rk";
    case Neighborhood::Invert: return "invert-rk";
    case Neighborhood::Farey: return "farey-rk";
  }
  return "?";
}

std::array<Solution, 2> simplex_companions(const ElitePool& elite, Evaluator& eval, Rng& rng) {
  if (elite.size() >= 2) {
    const std::size_t a = rng.below(elite.size());
    std::size_t b = rng.below(elite.size() - 1);
    if (b >= a) ++b;
    return {elite[a], elite[b]};
  }
  std::array<Solution, 2> out;
  for (Solution& s : out) {
    s.keys = create_initial_solution(eval.dimension(), rng);
    s.cost = eval(s.keys);
  }
  return out;
}

Solution apply_neighborhood(Neighborhood nb, const Solution& x, double h, Evaluator& eval,
                            const ElitePool& elite, Rng& rng) {
  switch (nb) {
    case Neighborhood::Grid:
      return grid_search(x, h, eval, rng);
    case Neighborhood::NelderMead: {
      const auto [x2, x3] = simplex_companions(elite, eval, rng);
      return nelder_mead_search(x, x2, x3, h, eval, rng);
    }
    case Neighborhood::Swap:
      return swap_rk(x, eval, rng);
    case Neighborhood::Invert:
      return invert_rk(x, eval, rng);
    case Neighborhood::Farey:
      return farey_rk(x, eval, rng);
  }
  return x;
}

Solution rvnd(const Solution& x, std::span<const NeighborhoodMove> moves, Evaluator& eval, Rng& rng,
              RvndTrace* trace) {
  Solution cur = x;
  std::vector<int> active(moves.size());
  std::iota(active.begin(), active.end(), 0);
  while (!active.empty() && !eval.exhausted()) {
    const std::size_t pick = rng.below(active.size());
    const int move = active[pick];
    Solution candidate = moves[move](cur);
    const bool improved = candidate.cost < cur.cost;
    if (trace) {
      ++trace->applications;
      trace->sequence.push_back(move);
      trace->improved.push_back(improved);
    }
    if (improved) {
      cur = std::move(candidate);
      active.resize(moves.size());
      std::iota(active.begin(), active.end(), 0);
      if (trace) ++trace->restarts;
    } else {
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(pick));
    }
  }
  return cur;
}

Solution rvnd(const Solution& x, double h, Evaluator& eval, const ElitePool& elite, Rng& rng,
              RvndTrace* trace) {
  static constexpr std::array<Neighborhood, 5> kAll = {Neighborhood::Grid, Neighborhood::NelderMead,
                                                      Neighborhood::Swap, Neighborhood::Invert,
                                                      Neighborhood::Farey};
  std::array<NeighborhoodMove, 5> moves;
  for (std::size_t k = 0; k < kAll.size(); ++k)
    moves[k] = [&, nb = kAll[k]](const Solution& s) { return apply_neighborhood(nb, s, h, eval, elite, rng); };
  return rvnd(x, std::span<const NeighborhoodMove>(moves), eval, rng, trace);
}

}  // namespace rkgrasp
