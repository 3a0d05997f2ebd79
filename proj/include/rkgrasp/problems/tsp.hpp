#pragma once

#include <string>
#include <vector>

#include "rkgrasp/decoder.hpp"

namespace rkgrasp {

struct TspInstance {
  std::string name;
  Matrix distance;  ///< d(i,j), possibly asymmetric

  int size() const { return static_cast<int>(distance.rows()); }
  /// Throws std::invalid_argument unless square, n >= 3, zero diagonal and d >= 0.
  void validate() const;
};

struct TspTour {
  double cost = kInfinity;
  std::vector<int> tour;  ///< closed tour, each city once
};

/// Cheapest insertion over the cities sorted by key: the first three open the
/// route, each later city k goes after the route city j minimising
/// d(j,k) + d(k,succ j) - d(j,succ j).
TspTour decode_tsp(const RandomKeys& x, const TspInstance& inst);

double tour_length(const std::vector<int>& tour, const TspInstance& inst);

class TspDecoder final : public Decoder {
 public:
  explicit TspDecoder(TspInstance inst);

  int dimension() const override { return inst_.size(); }
  double cost(const RandomKeys& x) const override { return decode_tsp(x, inst_).cost; }
  DecodedSolution decode(const RandomKeys& x) const override;
  std::string_view problem() const override { return "tsp"; }
  int natural_size() const override { return inst_.size(); }
  const TspInstance& instance() const { return inst_; }

 private:
  TspInstance inst_;
};

}  // namespace rkgrasp
