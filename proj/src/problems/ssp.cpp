#include "rkgrasp/problems/ssp.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace rkgrasp {

SspInstance::SspInstance(ToolMatrix needs, int capacity, std::string name)
    : needs_(std::move(needs)), capacity_(capacity), name_(std::move(name)), tools_of_(needs_.rows()) {
  if (jobs() < 1 || tools() < 1) throw std::invalid_argument("ssp: need at least one job and one tool");
  if (capacity_ < 1) throw std::invalid_argument("ssp: magazine capacity must be positive");
  for (int t = 0; t < jobs(); ++t) {
    for (int u = 0; u < tools(); ++u) {
      const int v = needs_(t, u);
      if (v != 0 && v != 1) throw std::invalid_argument("ssp: non-binary entry for job " + std::to_string(t + 1));
      if (v) tools_of_[t].push_back(u);
    }
    if (static_cast<int>(tools_of_[t].size()) > capacity_)
      throw std::invalid_argument("ssp: job " + std::to_string(t + 1) + " needs " +
                                  std::to_string(tools_of_[t].size()) + " tools, magazine holds " +
                                  std::to_string(capacity_));
  }
}

int ktns_switches(std::span<const int> sequence, const SspInstance& inst) {
  const int m = inst.tools();
  const int len = static_cast<int>(sequence.size());
  constexpr int kNever = std::numeric_limits<int>::max();

  // next_use[t*m + u]: first position >= t whose job needs tool u.
  std::vector<int> next_use(static_cast<std::size_t>(len + 1) * m, kNever);
  for (int t = len - 1; t >= 0; --t) {
    std::copy_n(next_use.begin() + static_cast<std::ptrdiff_t>(t + 1) * m, m,
                next_use.begin() + static_cast<std::ptrdiff_t>(t) * m);
    for (int u : inst.tools_of(sequence[t])) next_use[static_cast<std::size_t>(t) * m + u] = t;
  }

  std::vector<char> loaded(m, 0);
  std::vector<char> needed(m, 0);
  int in_magazine = 0;
  int switches = 0;
  for (int t = 0; t < len; ++t) {
    const auto& req = inst.tools_of(sequence[t]);
    for (int u : req) needed[u] = 1;
    for (int u : req) {
      if (loaded[u]) continue;
      if (in_magazine < inst.capacity()) {
        ++in_magazine;
      } else {
        int victim = -1;
        int victim_next = -1;
        const int* after = next_use.data() + static_cast<std::ptrdiff_t>(t + 1) * m;
        for (int v = 0; v < m; ++v) {
          if (!loaded[v] || needed[v]) continue;
          if (after[v] >= victim_next) {
            victim = v;
            victim_next = after[v];
          }
        }
        loaded[victim] = 0;
        ++switches;
      }
      loaded[u] = 1;
    }
    for (int u : req) needed[u] = 0;
  }
  return switches;
}

SspSequence decode_ssp(const RandomKeys& x, const SspInstance& inst) {
  if (x.size() != inst.jobs()) throw std::invalid_argument("decode_ssp: dimension mismatch");
  SspSequence out;
  out.jobs = argsort(x);
  out.cost = ktns_switches(out.jobs, inst);
  return out;
}

DecodedSolution SspDecoder::decode(const RandomKeys& x) const {
  const SspSequence s = decode_ssp(x, inst_);
  std::ostringstream os;
  os << "sequence";
  for (int j : s.jobs) os << ' ' << j + 1;
  return {static_cast<double>(s.cost), os.str()};
}

}  // namespace rkgrasp
