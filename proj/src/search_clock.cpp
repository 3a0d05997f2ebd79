#include "rkgrasp/search_clock.hpp"

#include <ctime>
#include <stdexcept>

namespace rkgrasp {

double thread_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

SearchClock::SearchClock(ClockKind kind, double run_time, std::optional<std::int64_t> budget)
    : kind_(kind), run_time_(run_time), budget_(budget) {
  if (kind_ == ClockKind::DecodeBudget && !budget_)
    throw std::invalid_argument("decode-budget clock requires a decode-call budget");
  if (kind_ == ClockKind::ThreadCpu) cpu_start_ = thread_cpu_seconds();
  wall_start_ = std::chrono::steady_clock::now();
}

double SearchClock::elapsed(std::int64_t decode_calls) const {
  switch (kind_) {
    case ClockKind::ThreadCpu:
      return thread_cpu_seconds() - cpu_start_;
    case ClockKind::Wall:
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start_).count();
    case ClockKind::DecodeBudget:
      if (*budget_ <= 0) return run_time_;
      return run_time_ * static_cast<double>(decode_calls) / static_cast<double>(*budget_);
  }
  return 0.0;
}

}  // namespace rkgrasp
