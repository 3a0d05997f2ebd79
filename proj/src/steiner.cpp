#include "rkgrasp/steiner.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace rkgrasp {

namespace {

using Triple = StcpInstance::Triple;

std::vector<Triple> affine_plane_3() {
  // Points (a,b) in Z3 x Z3 as 3a+b; lines are {p, q, -(p+q)}.
  std::vector<Triple> out;
  for (int p = 0; p < 9; ++p)
    for (int q = p + 1; q < 9; ++q) {
      const int r = 3 * ((6 - p / 3 - q / 3) % 3) + (6 - p % 3 - q % 3) % 3;
      if (r > q) out.push_back({p, q, r});
    }
  return out;
}

std::vector<Triple> bose_15() {
  auto mul = [](int a, int b) { return (3 * (a + b)) % 5; };
  auto point = [](int x, int layer) { return x + 5 * layer; };
  std::vector<Triple> out;
  for (int x = 0; x < 5; ++x) out.push_back({point(x, 0), point(x, 1), point(x, 2)});
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y)
      for (int i = 0; i < 3; ++i) out.push_back({point(x, i), point(y, i), point(mul(x, y), (i + 1) % 3)});
  return out;
}

std::vector<Triple> triple_system(int m, const std::vector<Triple>& base) {
  std::vector<Triple> out;
  out.reserve(9 * base.size() + static_cast<std::size_t>(m));
  for (int layer = 0; layer < 3; ++layer)
    for (const Triple& t : base) out.push_back({t[0] + layer * m, t[1] + layer * m, t[2] + layer * m});
  for (int x = 0; x < m; ++x) out.push_back({x, x + m, x + 2 * m});
  for (const Triple& t : base) {
    Triple p = t;
    std::sort(p.begin(), p.end());
    do {
      out.push_back({p[0], p[1] + m, p[2] + 2 * m});
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

}  // namespace

StcpInstance steiner_triple_system(int order) {
  int base = order;
  int levels = 0;
  while (base > 15 && base % 3 == 0) {
    base /= 3;
    ++levels;
  }
  if (base != 9 && base != 15) throw std::invalid_argument("no classic Steiner system of order " + std::to_string(order));
  std::vector<Triple> triples = base == 9 ? affine_plane_3() : bose_15();
  int m = base;
  for (int k = 0; k < levels; ++k) {
    triples = triple_system(m, triples);
    m *= 3;
  }
  return StcpInstance(order, std::move(triples), true, "stn" + std::to_string(order));
}

}  // namespace rkgrasp
