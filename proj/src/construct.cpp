#include "rkgrasp/construct.hpp"

#include <cmath>
#include <stdexcept>

namespace rkgrasp {

namespace {

void check_step(double h) {
  if (!(h > 0.0 && h <= 1.0)) throw std::invalid_argument("grid step h must be in (0,1]");
}

}  // namespace

std::vector<double> line_search_candidates(double key, double h) {
  check_step(h);
  const int steps = static_cast<int>(std::floor(1.0 / h));
  std::vector<double> values;
  values.reserve(2 * static_cast<std::size_t>(steps) + 1);
  values.push_back(key);
  for (int k = 1; k <= steps; ++k) {
    for (const int sign : {1, -1}) {
      const double v = key + sign * k * h;
      if (v >= 0.0 && v < 1.0) values.push_back(v);
    }
  }
  return values;
}

int line_search_sample_size(double h) {
  check_step(h);
  return static_cast<int>(std::ceil(std::log2(1.0 / h))) + 1;
}

LineSearchResult line_search(const RandomKeys& x, double h, int i, Evaluator& eval, Rng& rng) {
  if (i < 0 || i >= x.size()) throw std::out_of_range("line_search: coordinate out of range");
  std::vector<double> pool = line_search_candidates(x[i], h);
  const int q = line_search_sample_size(h);

  RandomKeys probe = x;
  LineSearchResult best;
  for (int t = 0; t < q && !pool.empty(); ++t) {
    const std::size_t j = rng.below(pool.size());
    probe[i] = pool[j];
    const double cost = eval(probe);
    if (cost < best.cost) best = {pool[j], cost};
    pool[j] = pool.back();
    pool.pop_back();
  }
  return best;
}

RandomKeys construct_greedy_randomized(const RandomKeys& x0, double h, Evaluator& eval, Rng& rng,
                                       std::optional<double> alpha_override,
                                       ConstructionTrace* trace) {
  check_step(h);
  const auto n = static_cast<int>(x0.size());
  RandomKeys x = x0;
  const double alpha = alpha_override ? *alpha_override : rng.uniform(0.0, 1.0);

  std::vector<char> unfixed(n, 1);
  std::vector<double> best_value(n, 0.0);
  std::vector<double> best_cost(n, kInfinity);
  std::vector<int> rcl;
  rcl.reserve(n);
  bool reuse = false;

  for (int remaining = n; remaining > 0; --remaining) {
    if (eval.exhausted()) break;

    double lo = kInfinity;
    double hi = -kInfinity;
    for (int i = 0; i < n; ++i) {
      if (!unfixed[i]) continue;
      if (!reuse) {
        if (eval.exhausted()) return x;
        const LineSearchResult r = line_search(x, h, i, eval, rng);
        best_value[i] = r.value;
        best_cost[i] = r.cost;
      }
      lo = std::min(lo, best_cost[i]);
      hi = std::max(hi, best_cost[i]);
    }

    double threshold = lo + alpha * (hi - lo);
    if (std::isnan(threshold) || lo == hi) threshold = alpha > 0.0 ? hi : lo;

    rcl.clear();
    for (int i = 0; i < n; ++i)
      if (unfixed[i] && best_cost[i] <= threshold) rcl.push_back(i);

    const int j = rcl[rng.below(rcl.size())];
    if (trace) {
      ++trace->iterations;
      if (reuse) ++trace->reused_scans;
      trace->fix_order.push_back(j);
      trace->rcl_sizes.push_back(rcl.size());
    }
    if (x[j] == best_value[j]) {
      reuse = true;
    } else {
      x[j] = best_value[j];
      reuse = false;
    }
    unfixed[j] = 0;
  }
  return x;
}

}  // namespace rkgrasp
