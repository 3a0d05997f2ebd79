#include "rkgrasp/elite_pool.hpp"

#include <algorithm>
#include <stdexcept>

namespace rkgrasp {

ElitePool::ElitePool(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ == 0) throw std::invalid_argument("elite pool capacity must be positive");
  entries_.reserve(capacity_);
}

bool ElitePool::insert(const Solution& s) {
  const bool full = entries_.size() >= capacity_;
  if (full && !(s.cost < entries_.back().cost)) return false;
  for (const Solution& e : entries_)
    if (e.keys.size() == s.keys.size() && e.keys == s.keys) return false;

  if (full) entries_.pop_back();
  auto pos = std::upper_bound(entries_.begin(), entries_.end(), s.cost,
                              [](double c, const Solution& e) { return c < e.cost; });
  entries_.insert(pos, s);
  return true;
}

}  // namespace rkgrasp
