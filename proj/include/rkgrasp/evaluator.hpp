#pragma once

#include <cstdint>
#include <optional>

#include "rkgrasp/decoder.hpp"
#include "rkgrasp/search_clock.hpp"

namespace rkgrasp {

/// Stopping rule shared by every phase of a run.
struct StopRule {
  double time_limit = kInfinity;                ///< seconds on the run clock
  std::optional<std::int64_t> max_decode_calls;  ///< optional evaluation budget
  ClockKind clock = ClockKind::ThreadCpu;
};

/// True when elapsed >= time_limit (not in DecodeBudget mode, whose clock
/// is virtual) or when the decode budget is configured and spent.
bool stop_condition(double elapsed, std::int64_t decode_calls, const StopRule& rule);

/// Per-run view of a decoder: counts decode calls and answers whether the
/// run must stop. Not thread-safe; one evaluator per run.
class Evaluator {
 public:
  Evaluator(const Decoder& decoder, const StopRule& rule);

  double operator()(const RandomKeys& x) {
    ++calls_;
    return decoder_.cost(x);
  }

  int dimension() const { return decoder_.dimension(); }
  const Decoder& decoder() const { return decoder_; }
  std::int64_t calls() const { return calls_; }

  double elapsed() const { return clock_.elapsed(calls_); }
  double time_limit() const { return rule_.time_limit; }

  /// True once the time limit or the decode budget is reached.
  bool exhausted() const;

 private:
  const Decoder& decoder_;
  StopRule rule_;
  SearchClock clock_;
  std::int64_t calls_ = 0;
};

}  // namespace rkgrasp
