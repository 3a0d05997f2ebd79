#include "rkgrasp/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace rkgrasp {

double clamp_key(double v) {
  if (!std::isfinite(v)) throw std::domain_error("clamp_key: non-finite key");
  return std::min(std::max(v, 0.0), kMaxKey);
}

bool in_unit_box(const RandomKeys& x) {
  return (x.array() >= 0.0).all() && (x.array() < 1.0).all();
}

RandomKeys create_initial_solution(int n, Rng& rng) {
  if (n <= 0) throw std::invalid_argument("create_initial_solution: dimension must be positive");
  RandomKeys x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.uniform();
  return x;
}

std::vector<int> argsort(const Eigen::Ref<const Eigen::VectorXd>& x) {
  const auto n = static_cast<std::size_t>(x.size());
  // (key, index) pairs sort like a stable argsort and avoid indirect loads.
  std::vector<std::pair<double, int>> keyed(n);
  for (std::size_t i = 0; i < n; ++i) keyed[i] = {x[static_cast<Eigen::Index>(i)], static_cast<int>(i)};
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = keyed[i].second;
  return order;
}

std::vector<int> argsort(const RandomKeys& x) {
  return argsort(Eigen::Ref<const Eigen::VectorXd>(x));
}

}  // namespace rkgrasp
