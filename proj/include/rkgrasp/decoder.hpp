#pragma once

#include <string>
#include <string_view>

#include "rkgrasp/core.hpp"

namespace rkgrasp {

/// Cost of a decoded point plus a human-readable rendering of the problem
/// solution (tour, cover, assignment, sequence).
struct DecodedSolution {
  double cost = kInfinity;
  std::string artifact;
};

/// Maps points of the unit hypercube to feasible solutions of one problem.
///
/// Implementations hold an immutable instance and keep no mutable state, so
/// one decoder may be shared read-only by concurrent runs. cost() is the hot
/// path used by the search; decode() additionally renders the solution.
class Decoder {
 public:
  virtual ~Decoder() = default;

  virtual int dimension() const = 0;
  virtual double cost(const RandomKeys& x) const = 0;
  virtual DecodedSolution decode(const RandomKeys& x) const = 0;

  /// Short problem tag, e.g. "tsp".
  virtual std::string_view problem() const = 0;

  /// Instance size in the unit used for the default time limit
  /// (cities, nodes, columns, jobs or base stations).
  virtual int natural_size() const = 0;
};

}  // namespace rkgrasp
