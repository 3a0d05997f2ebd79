#include "rkgrasp/problems/thlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rkgrasp {

void ThlpInstance::validate() const {
  const int n = size();
  if (n < 1 || cost.cols() != n) throw std::invalid_argument("thlp: cost matrix must be square and non-empty");
  if (demand.rows() != n || demand.cols() != n) throw std::invalid_argument("thlp: demand matrix must be n x n");
  if (hubs < 1 || hubs > n) throw std::invalid_argument("thlp: hub count must satisfy 1 <= p <= n");
  if (!(discount > 0.0 && discount <= 1.0)) throw std::invalid_argument("thlp: discount must be in (0,1]");
  if (!(collection >= 0.0 && distribution >= 0.0)) throw std::invalid_argument("thlp: negative cost factor");
  if (!(cost.array() >= 0.0).all() || !(demand.array() >= 0.0).all())
    throw std::invalid_argument("thlp: costs and demands must be non-negative");
}

int thlp_dimension(int nodes, int hubs) { return nodes + (nodes - hubs) + hubs * (hubs - 1) / 2; }

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

ThlpSolution decode_thlp(const RandomKeys& x, const ThlpInstance& inst) {
  const int n = inst.size();
  const int p = inst.hubs;
  if (x.size() != thlp_dimension(n, p)) throw std::invalid_argument("decode_thlp: dimension mismatch");

  ThlpSolution out;
  const std::vector<int> order = argsort(Eigen::Ref<const Eigen::VectorXd>(x.head(n)));
  out.hubs.assign(order.begin(), order.begin() + p);

  std::vector<int> slot_of(n, -1);
  for (int s = 0; s < p; ++s) slot_of[out.hubs[s]] = s;

  out.hub_of.assign(n, -1);
  int k = n;
  for (int i = 0; i < n; ++i) {
    if (slot_of[i] >= 0) {
      out.hub_of[i] = i;
      continue;
    }
    const int slot = std::min(static_cast<int>(std::floor(x[k++] * p)), p - 1);
    out.hub_of[i] = out.hubs[slot];
  }

  // Hub-slot pairs in lexicographic order, keyed by segment three.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) pairs.emplace_back(a, b);
  const std::vector<int> edge_order = argsort(Eigen::Ref<const Eigen::VectorXd>(x.tail(pairs.size())));

  std::vector<std::vector<std::pair<int, double>>> adj(p);
  DisjointSets sets(p);
  for (int e : edge_order) {
    if (static_cast<int>(out.tree_edges.size()) == p - 1) break;
    const auto [a, b] = pairs[e];
    if (!sets.unite(a, b)) continue;
    const int ha = out.hubs[a];
    const int hb = out.hubs[b];
    out.tree_edges.emplace_back(ha, hb);
    adj[a].emplace_back(b, inst.cost(ha, hb));
    adj[b].emplace_back(a, inst.cost(hb, ha));
  }

  // Tree distances between hub slots, one traversal per root.
  Matrix path = Matrix::Zero(p, p);
  std::vector<int> stack;
  std::vector<char> seen(p);
  for (int root = 0; root < p; ++root) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, root);
    seen[root] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [v, c] : adj[u]) {
        if (seen[v]) continue;
        seen[v] = 1;
        path(root, v) = path(root, u) + c;
        stack.push_back(v);
      }
    }
  }

  const Matrix& w = inst.demand;
  const Eigen::VectorXd outflow = w.rowwise().sum();
  const Eigen::VectorXd inflow = w.colwise().sum().transpose();
  Matrix hub_flow = Matrix::Zero(p, p);
  double access = 0.0;
  for (int i = 0; i < n; ++i) {
    const int h = out.hub_of[i];
    access += inst.collection * outflow[i] * inst.cost(i, h) + inst.distribution * inflow[i] * inst.cost(h, i);
    for (int j = 0; j < n; ++j) hub_flow(slot_of[h], slot_of[out.hub_of[j]]) += w(i, j);
  }
  out.cost = access + inst.discount * hub_flow.cwiseProduct(path).sum();
  return out;
}

ThlpDecoder::ThlpDecoder(ThlpInstance inst) : inst_(std::move(inst)) { inst_.validate(); }

DecodedSolution ThlpDecoder::decode(const RandomKeys& x) const {
  const ThlpSolution s = decode_thlp(x, inst_);
  std::ostringstream os;
  os << "hubs";
  for (int h : s.hubs) os << ' ' << h + 1;
  os << "\nassignment";
  for (int h : s.hub_of) os << ' ' << h + 1;
  os << "\ntree";
  for (const auto& [a, b] : s.tree_edges) os << ' ' << a + 1 << '-' << b + 1;
  return {s.cost, os.str()};
}

}  // namespace rkgrasp
