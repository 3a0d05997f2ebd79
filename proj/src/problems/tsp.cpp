#include "rkgrasp/problems/tsp.hpp"

#include <sstream>
#include <stdexcept>

namespace rkgrasp {

void TspInstance::validate() const {
  if (distance.rows() != distance.cols()) throw std::invalid_argument("tsp: distance matrix must be square");
  if (distance.rows() < 3) throw std::invalid_argument("tsp: at least 3 cities are required");
  if (!(distance.array() >= 0.0).all()) throw std::invalid_argument("tsp: negative distance");
  if (!(distance.diagonal().array() == 0.0).all()) throw std::invalid_argument("tsp: d(i,i) must be 0");
}

TspTour decode_tsp(const RandomKeys& x, const TspInstance& inst) {
  const int n = inst.size();
  if (x.size() != n) throw std::invalid_argument("decode_tsp: dimension mismatch");
  if (n < 3) throw std::invalid_argument("decode_tsp: at least 3 cities are required");
  const Matrix& d = inst.distance;
  const std::vector<int> order = argsort(x);

  // Route as a successor array over city ids.
  std::vector<int> next(n, -1);
  next[order[0]] = order[1];
  next[order[1]] = order[2];
  next[order[2]] = order[0];

  for (int t = 3; t < n; ++t) {
    const int k = order[t];
    int best_j = order[0];
    double best = kInfinity;
    int j = order[0];
    do {
      const int s = next[j];
      const double delta = d(j, k) + d(k, s) - d(j, s);
      if (delta < best) {
        best = delta;
        best_j = j;
      }
      j = s;
    } while (j != order[0]);
    next[k] = next[best_j];
    next[best_j] = k;
  }

  TspTour out;
  out.tour.reserve(n);
  int c = order[0];
  do {
    out.tour.push_back(c);
    c = next[c];
  } while (c != order[0]);
  out.cost = tour_length(out.tour, inst);
  return out;
}

double tour_length(const std::vector<int>& tour, const TspInstance& inst) {
  double len = 0.0;
  for (std::size_t i = 0; i < tour.size(); ++i) len += inst.distance(tour[i], tour[(i + 1) % tour.size()]);
  return len;
}

TspDecoder::TspDecoder(TspInstance inst) : inst_(std::move(inst)) { inst_.validate(); }

DecodedSolution TspDecoder::decode(const RandomKeys& x) const {
  const TspTour t = decode_tsp(x, inst_);
  std::ostringstream os;
  os << "tour";
  for (int c : t.tour) os << ' ' << c + 1;
  return {t.cost, os.str()};
}

}  // namespace rkgrasp
