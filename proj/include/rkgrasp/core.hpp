#pragma once

#include <Eigen/Core>

#include <limits>
#include <stdexcept>
#include <vector>

#include "rkgrasp/rng.hpp"

namespace rkgrasp {

/// A point of the unit hypercube. Every coefficient lies in [0,1).
using RandomKeys = Eigen::VectorXd;

/// Distance, cost and demand matrices.
using Matrix = Eigen::MatrixXd;

/// Largest representable key used by the clamp, 1 - 1e-12.
inline constexpr double kKeyEpsilon = 1e-12;
inline constexpr double kMaxKey = 1.0 - kKeyEpsilon;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A key vector together with its decoded cost.
struct Solution {
  RandomKeys keys;
  double cost = kInfinity;
};

/// Clamps v into [0, 1-1e-12]. Throws std::domain_error for non-finite v.
double clamp_key(double v);

/// True when every key is in [0,1).
bool in_unit_box(const RandomKeys& x);

/// n independent UnifRand(0,1) keys. Throws std::invalid_argument for n == 0.
RandomKeys create_initial_solution(int n, Rng& rng);

/// Indices 0..n-1 sorted ascending by key, ties broken by index.
std::vector<int> argsort(const RandomKeys& x);
std::vector<int> argsort(const Eigen::Ref<const Eigen::VectorXd>& x);

}  // namespace rkgrasp
