#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace rkgrasp {

enum class ClockKind {
  ThreadCpu,     ///< CPU time consumed by the calling thread.
  Wall,          ///< Steady wall clock.
  DecodeBudget,  ///< Virtual seconds proportional to decode calls spent.
};

/// Elapsed-time source for one run.
///
/// In DecodeBudget mode the clock never reads the system: elapsed seconds are
/// run_time * calls / budget, which keeps runs bit-reproducible while the
/// annealing horizon still shrinks the way it would under a time limit.
class SearchClock {
 public:
  SearchClock(ClockKind kind, double run_time, std::optional<std::int64_t> budget);

  ClockKind kind() const { return kind_; }
  double run_time() const { return run_time_; }

  /// Seconds since construction (or virtual seconds for DecodeBudget).
  double elapsed(std::int64_t decode_calls) const;

 private:
  ClockKind kind_;
  double run_time_;
  std::optional<std::int64_t> budget_;
  double cpu_start_ = 0.0;
  std::chrono::steady_clock::time_point wall_start_;
};

/// CPU seconds consumed by the calling thread.
double thread_cpu_seconds();

}  // namespace rkgrasp
