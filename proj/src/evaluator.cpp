#include "rkgrasp/evaluator.hpp"

namespace rkgrasp {

Evaluator::Evaluator(const Decoder& decoder, const StopRule& rule)
    : decoder_(decoder), rule_(rule), clock_(rule.clock, rule.time_limit, rule.max_decode_calls) {}

bool stop_condition(double elapsed, std::int64_t decode_calls, const StopRule& rule) {
  if (rule.max_decode_calls && decode_calls >= *rule.max_decode_calls) return true;
  if (rule.clock == ClockKind::DecodeBudget) return false;
  return elapsed >= rule.time_limit;
}

bool Evaluator::exhausted() const {
  if (rule_.max_decode_calls && calls_ >= *rule_.max_decode_calls) return true;
  if (rule_.clock == ClockKind::DecodeBudget) return false;
  return stop_condition(elapsed(), calls_, rule_);
}

}  // namespace rkgrasp
