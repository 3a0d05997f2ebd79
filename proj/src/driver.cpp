#include "rkgrasp/driver.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "rkgrasp/construct.hpp"
#include "rkgrasp/elite_pool.hpp"
#include "rkgrasp/local_search.hpp"

namespace rkgrasp {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::GraspGrid: return "rk-grasp-grid";
    case Algorithm::GraspNelderMead: return "rk-grasp-nm";
    case Algorithm::GraspRvnd: return "rk-grasp-rvnd";
    case Algorithm::MultiStart: return "multi-start";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::GraspGrid, Algorithm::GraspNelderMead, Algorithm::GraspRvnd,
                      Algorithm::MultiStart})
    if (to_string(a) == name) return a;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

void SolverParams::validate() const {
  if (!(h_end > 0.0 && h_end <= h_start && h_start <= 1.0))
    throw std::invalid_argument("grid steps must satisfy 0 < h_end <= h_start <= 1");
  if (time_limit && (std::isnan(*time_limit) || *time_limit < 0.0))
    throw std::invalid_argument("time limit must be non-negative");
  if (clock == ClockKind::DecodeBudget && !max_decode_calls)
    throw std::invalid_argument("decode-budget clock requires max_decode_calls");
  if (max_decode_calls && *max_decode_calls < 0)
    throw std::invalid_argument("decode budget must be non-negative");
  if (elite_capacity == 0) throw std::invalid_argument("elite capacity must be positive");
}

double acceptance_probability(double delta, double elapsed, double run_time) {
  if (delta <= 0.0) return 1.0;
  const double remaining = std::max(run_time - elapsed, 1e-9);
  return std::exp(-delta / remaining);
}

bool accept(double candidate_cost, double current_cost, double elapsed, double run_time, Rng& rng) {
  const double delta = candidate_cost - current_cost;
  if (delta <= 0.0) return true;
  return rng.uniform() < acceptance_probability(delta, elapsed, run_time);
}

int grid_levels(double h_start, double h_end) {
  int levels = 0;
  for (double h = h_start; h >= h_end; h /= 2.0) ++levels;
  return levels;
}

namespace {

StopRule make_rule(const Decoder& decoder, const SolverParams& params) {
  params.validate();
  StopRule rule;
  rule.time_limit = params.time_limit.value_or(static_cast<double>(decoder.natural_size()));
  rule.max_decode_calls = params.max_decode_calls;
  rule.clock = params.clock;
  return rule;
}

// Incumbent bookkeeping shared by both drivers.
class Incumbent {
 public:
  Incumbent(RunRecord& record, const Evaluator& eval) : record_(record), eval_(eval) {}

  void offer(const Solution& s) {
    if (!(s.cost < record_.best_cost)) return;
    record_.best_cost = s.cost;
    record_.best_keys = s.keys;
    record_.time_to_best = eval_.elapsed();
    record_.incumbent_trace.push_back(s.cost);
  }

 private:
  RunRecord& record_;
  const Evaluator& eval_;
};

RunRecord start_record(const SolverParams& params) {
  RunRecord rec;
  rec.algorithm = std::string(to_string(params.algorithm));
  rec.seed = params.seed;
  return rec;
}

void finish_record(RunRecord& rec, const Evaluator& eval, std::chrono::steady_clock::time_point wall_start) {
  rec.decode_calls = eval.calls();
  rec.elapsed = eval.elapsed();
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  if (rec.time_to_best > rec.elapsed) rec.time_to_best = rec.elapsed;
}

Solution local_search(Algorithm algo, const Solution& x, double h, Evaluator& eval, const ElitePool& elite,
                      Rng& rng) {
  switch (algo) {
    case Algorithm::GraspGrid:
      return grid_search(x, h, eval, rng);
    case Algorithm::GraspNelderMead:
      return apply_neighborhood(Neighborhood::NelderMead, x, h, eval, elite, rng);
    case Algorithm::GraspRvnd:
      return rvnd(x, h, eval, elite, rng);
    case Algorithm::MultiStart:
      break;
  }
  return x;
}

}  // namespace

RunRecord rk_grasp(const Decoder& decoder, const SolverParams& params) {
  const auto wall_start = std::chrono::steady_clock::now();
  const StopRule rule = make_rule(decoder, params);
  Evaluator eval(decoder, rule);
  Rng rng(params.seed);
  ElitePool elite(params.elite_capacity);
  RunRecord rec = start_record(params);
  Incumbent incumbent(rec, eval);
  const int n = decoder.dimension();

  auto stopped = [&] {
    if (rule.time_limit <= 0.0) return true;
    if (params.target_cost && rec.best_cost <= *params.target_cost) return true;
    return eval.exhausted();
  };

  while (!stopped()) {
    ++rec.restarts;
    Solution x;
    x.keys = create_initial_solution(n, rng);
    x.cost = eval(x.keys);

    double h = params.h_start;
    int levels = 1;
    while (h >= params.h_end && !stopped()) {
      Solution built;
      built.keys = construct_greedy_randomized(x.keys, h, eval, rng);
      built.cost = eval(built.keys);
      Solution improved = local_search(params.algorithm, built, h, eval, elite, rng);
      elite.insert(improved);

      if (improved.cost < rec.best_cost) {
        incumbent.offer(improved);
      } else {
        h /= 2.0;
        ++rec.grid_halvings;
        if (h >= params.h_end) ++levels;
      }
      if (accept(improved.cost, x.cost, eval.elapsed(), rule.time_limit, rng)) x = std::move(improved);
    }
    rec.max_levels_per_restart = std::max(rec.max_levels_per_restart, levels);
  }
  finish_record(rec, eval, wall_start);
  return rec;
}

RunRecord multi_start(const Decoder& decoder, const SolverParams& params) {
  const auto wall_start = std::chrono::steady_clock::now();
  const StopRule rule = make_rule(decoder, params);
  Evaluator eval(decoder, rule);
  Rng rng(params.seed);
  RunRecord rec = start_record(params);
  Incumbent incumbent(rec, eval);
  const int n = decoder.dimension();

  while (rule.time_limit > 0.0 && !eval.exhausted() &&
         !(params.target_cost && rec.best_cost <= *params.target_cost)) {
    Solution s;
    s.keys = create_initial_solution(n, rng);
    s.cost = eval(s.keys);
    incumbent.offer(s);
  }
  finish_record(rec, eval, wall_start);
  return rec;
}

RunRecord solve(const Decoder& decoder, const SolverParams& params) {
  return params.algorithm == Algorithm::MultiStart ? multi_start(decoder, params) : rk_grasp(decoder, params);
}

}  // namespace rkgrasp
