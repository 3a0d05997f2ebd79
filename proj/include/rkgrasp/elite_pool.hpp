#pragma once

#include <cstddef>
#include <vector>

#include "rkgrasp/core.hpp"

namespace rkgrasp {

/// Bounded pool of the best distinct solutions seen during a run, kept
/// sorted by ascending cost.
class ElitePool {
 public:
  explicit ElitePool(std::size_t capacity = 10);

  /// Inserts s when the pool has room or s is strictly cheaper than the
  /// worst entry. Exact key duplicates are rejected. Returns whether s entered.
  bool insert(const Solution& s);

  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return entries_.empty(); }
  const std::vector<Solution>& entries() const { return entries_; }
  const Solution& operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::size_t capacity_;
  std::vector<Solution> entries_;
};

}  // namespace rkgrasp
