#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rkgrasp/decoder.hpp"

namespace rkgrasp {

/// Tree of hubs location instance.
struct ThlpInstance {
  std::string name;
  int hubs = 2;              ///< p
  Matrix cost;               ///< unit transport cost c(i,j)
  Matrix demand;             ///< w(i,j)
  double discount = 1.0;     ///< factor on hub-tree arcs, in (0,1]
  double collection = 1.0;   ///< factor on node -> hub arcs
  double distribution = 1.0; ///< factor on hub -> node arcs

  int size() const { return static_cast<int>(cost.rows()); }
  void validate() const;
};

/// n + (n - p) + p(p-1)/2.
int thlp_dimension(int nodes, int hubs);

struct ThlpSolution {
  double cost = kInfinity;
  std::vector<int> hubs;                         ///< hub nodes in key order
  std::vector<int> hub_of;                       ///< node -> its hub node
  std::vector<std::pair<int, int>> tree_edges;   ///< p-1 edges between hub nodes
};

/// Three-segment decoder: hubs are the p smallest keys of segment one;
/// segment two assigns the non-hubs (ascending node index) to hub slot
/// min(floor(key*p), p-1); segment three orders the hub-slot pairs for
/// Kruskal. Cost sums w(i,j) * (collection*c(i,h_i) + discount*tree path
/// cost(h_i,h_j) + distribution*c(h_j,j)) over ordered pairs.
ThlpSolution decode_thlp(const RandomKeys& x, const ThlpInstance& inst);

class ThlpDecoder final : public Decoder {
 public:
  explicit ThlpDecoder(ThlpInstance inst);

  int dimension() const override { return thlp_dimension(inst_.size(), inst_.hubs); }
  double cost(const RandomKeys& x) const override { return decode_thlp(x, inst_).cost; }
  DecodedSolution decode(const RandomKeys& x) const override;
  std::string_view problem() const override { return "thlp"; }
  int natural_size() const override { return inst_.size(); }
  const ThlpInstance& instance() const { return inst_; }

 private:
  ThlpInstance inst_;
};

}  // namespace rkgrasp
