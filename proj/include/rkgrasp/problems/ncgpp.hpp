#pragma once

#include <string>
#include <vector>

#include "rkgrasp/decoder.hpp"

namespace rkgrasp {

/// Node capacitated graph partitioning (handover minimisation) instance.
struct NcgppInstance {
  std::string name;
  Eigen::VectorXd traffic;   ///< T_b per base station
  Eigen::VectorXd capacity;  ///< C_r per RNC
  Matrix handover;           ///< H(b1,b2), may be asymmetric

  int stations() const { return static_cast<int>(traffic.size()); }
  int rncs() const { return static_cast<int>(capacity.size()); }

  /// Cost added per unassigned station: sum of all handovers + 1.
  double penalty() const { return handover.sum() + 1.0; }

  void validate() const;
};

struct NcgppAssignment {
  double cost = kInfinity;
  std::vector<int> rnc_of;  ///< station -> RNC index, -1 when unassigned
  int unassigned = 0;
};

/// Seeds the first ceil(x_last * |N|) stations of the key order into
/// separate RNCs, then places each remaining station in the feasible RNC
/// with the most handovers (both directions) to its members.
NcgppAssignment decode_ncgpp(const RandomKeys& x, const NcgppInstance& inst);

/// Handovers between different groups (unassigned stations are singletons)
/// plus the penalty for each unassigned station.
double ncgpp_cost(const std::vector<int>& rnc_of, const NcgppInstance& inst);

class NcgppDecoder final : public Decoder {
 public:
  explicit NcgppDecoder(NcgppInstance inst);

  int dimension() const override { return inst_.stations() + 1; }
  double cost(const RandomKeys& x) const override { return decode_ncgpp(x, inst_).cost; }
  DecodedSolution decode(const RandomKeys& x) const override;
  std::string_view problem() const override { return "ncgpp"; }
  int natural_size() const override { return inst_.stations(); }
  const NcgppInstance& instance() const { return inst_; }

 private:
  NcgppInstance inst_;
};

}  // namespace rkgrasp
