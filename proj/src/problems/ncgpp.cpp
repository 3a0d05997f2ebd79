#include "rkgrasp/problems/ncgpp.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rkgrasp {

void NcgppInstance::validate() const {
  if (stations() < 1 || rncs() < 1) throw std::invalid_argument("ncgpp: need at least one station and one RNC");
  if (handover.rows() != stations() || handover.cols() != stations())
    throw std::invalid_argument("ncgpp: handover matrix must be |B| x |B|");
  if (!(traffic.array() >= 0.0).all()) throw std::invalid_argument("ncgpp: negative traffic");
  if (!(capacity.array() > 0.0).all()) throw std::invalid_argument("ncgpp: capacities must be positive");
  if (!(handover.array() >= 0.0).all()) throw std::invalid_argument("ncgpp: negative handover count");
  if (!(handover.diagonal().array() == 0.0).all()) throw std::invalid_argument("ncgpp: H(b,b) must be 0");
}

NcgppAssignment decode_ncgpp(const RandomKeys& x, const NcgppInstance& inst) {
  const int nb = inst.stations();
  const int nr = inst.rncs();
  if (x.size() != nb + 1) throw std::invalid_argument("decode_ncgpp: dimension mismatch");

  const std::vector<int> order = argsort(Eigen::Ref<const Eigen::VectorXd>(x.head(nb)));
  const int seeds = std::min({static_cast<int>(std::ceil(x[nb] * nr)), nr, nb});

  NcgppAssignment out;
  out.rnc_of.assign(nb, -1);
  Eigen::VectorXd load = Eigen::VectorXd::Zero(nr);
  const Matrix& h = inst.handover;

  for (int k = 0; k < seeds; ++k) {
    const int b = order[k];
    if (inst.traffic[b] <= inst.capacity[k]) {
      out.rnc_of[b] = k;
      load[k] += inst.traffic[b];
    }
  }

  Eigen::VectorXd affinity(nr);
  for (int k = seeds; k < nb; ++k) {
    const int b = order[k];
    affinity.setZero();
    for (int t = 0; t < k; ++t) {
      const int m = order[t];
      if (out.rnc_of[m] >= 0) affinity[out.rnc_of[m]] += h(b, m) + h(m, b);
    }
    int best = -1;
    for (int r = 0; r < nr; ++r) {
      if (load[r] + inst.traffic[b] > inst.capacity[r]) continue;
      if (best < 0 || affinity[r] > affinity[best]) best = r;
    }
    if (best >= 0) {
      out.rnc_of[b] = best;
      load[best] += inst.traffic[b];
    }
  }

  for (int r : out.rnc_of)
    if (r < 0) ++out.unassigned;
  out.cost = ncgpp_cost(out.rnc_of, inst);
  return out;
}

double ncgpp_cost(const std::vector<int>& rnc_of, const NcgppInstance& inst) {
  const int nb = inst.stations();
  double cut = 0.0;
  int unassigned = 0;
  for (int a = 0; a < nb; ++a) {
    if (rnc_of[a] < 0) ++unassigned;
    for (int b = 0; b < nb; ++b)
      if (a != b && (rnc_of[a] < 0 || rnc_of[a] != rnc_of[b])) cut += inst.handover(a, b);
  }
  return cut + inst.penalty() * unassigned;
}

NcgppDecoder::NcgppDecoder(NcgppInstance inst) : inst_(std::move(inst)) { inst_.validate(); }

DecodedSolution NcgppDecoder::decode(const RandomKeys& x) const {
  const NcgppAssignment a = decode_ncgpp(x, inst_);
  std::ostringstream os;
  for (int r = 0; r < inst_.rncs(); ++r) {
    os << "rnc " << r + 1 << ':';
    for (int b = 0; b < inst_.stations(); ++b)
      if (a.rnc_of[b] == r) os << ' ' << b + 1;
    os << '\n';
  }
  os << "unassigned:";
  for (int b = 0; b < inst_.stations(); ++b)
    if (a.rnc_of[b] < 0) os << ' ' << b + 1;
  return {a.cost, os.str()};
}

}  // namespace rkgrasp
