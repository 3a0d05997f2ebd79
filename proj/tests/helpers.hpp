#pragma once

#include <functional>
#include <memory>
#include <string>

#include "rkgrasp/decoder.hpp"
#include "rkgrasp/evaluator.hpp"

namespace testing {

// Decoder backed by an arbitrary cost function.
class FunctionDecoder final : public rkgrasp::Decoder {
 public:
  FunctionDecoder(int n, std::function<double(const rkgrasp::RandomKeys&)> f) : n_(n), f_(std::move(f)) {}
  int dimension() const override { return n_; }
  double cost(const rkgrasp::RandomKeys& x) const override { return f_(x); }
  rkgrasp::DecodedSolution decode(const rkgrasp::RandomKeys& x) const override { return {f_(x), "f"}; }
  std::string_view problem() const override { return "function"; }
  int natural_size() const override { return n_; }

 private:
  int n_;
  std::function<double(const rkgrasp::RandomKeys&)> f_;
};

inline rkgrasp::StopRule budget_rule(std::int64_t calls) {
  rkgrasp::StopRule r;
  r.max_decode_calls = calls;
  r.clock = rkgrasp::ClockKind::DecodeBudget;
  r.time_limit = 100.0;
  return r;
}

inline rkgrasp::StopRule unlimited() {
  rkgrasp::StopRule r;
  r.clock = rkgrasp::ClockKind::Wall;
  return r;
}

}  // namespace testing
