#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rkgrasp/bench.hpp"
#include "rkgrasp/io.hpp"
#include "rkgrasp/steiner.hpp"

using namespace rkgrasp;

namespace {

std::map<std::string, double> parse_bks(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--bks", "expected name=value, got '" + item + "'");
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

std::vector<Algorithm> parse_algorithms(const std::vector<std::string>& names) {
  std::vector<Algorithm> out;
  for (const std::string& n : names) out.push_back(parse_algorithm(n));
  return out;
}

ClockKind parse_clock(const std::string& name) {
  if (name == "cpu") return ClockKind::ThreadCpu;
  if (name == "wall") return ClockKind::Wall;
  throw CLI::ValidationError("--clock", "expected cpu or wall");
}

void write_table(const ResultTable& table, const std::string& out, bool summary) {
  if (out.empty() || out == "-")
    emit_csv(table, std::cout);
  else
    emit_csv(table, std::filesystem::path(out));
  if (summary) emit_summary_csv(table.aggregates, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RK-GRASP random-key solver and benchmark harness"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance and print the best solution");
  std::string problem;
  std::string instance;
  std::string algo = "rk-grasp-rvnd";
  std::uint64_t seed = 1;
  std::optional<double> time_limit;
  std::optional<std::int64_t> budget;
  std::optional<double> target;
  double hs = 0.125;
  double he = 0.00098;
  std::string clock = "cpu";
  solve_cmd->add_option("--problem", problem, "tsp, thlp, stcp, ncgpp or ssp")->required();
  solve_cmd->add_option("instance", instance, "Instance file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--algo", algo, "rk-grasp-grid, rk-grasp-nm, rk-grasp-rvnd or multi-start");
  solve_cmd->add_option("--seed", seed);
  solve_cmd->add_option("--time-limit", time_limit, "Seconds (default: instance size)");
  solve_cmd->add_option("--decode-budget", budget, "Stop after this many decoder calls");
  solve_cmd->add_option("--target", target, "Stop once this cost is reached");
  solve_cmd->add_option("--hs", hs, "Initial grid step");
  solve_cmd->add_option("--he", he, "Final grid step");
  solve_cmd->add_option("--clock", clock, "cpu or wall");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run an experiment and write result rows as CSV");
  std::string config_path;
  std::vector<std::string> instances;
  std::vector<std::string> algos;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> bks_items;
  unsigned workers = 1;
  std::string out;
  bool summary = false;
  bench_cmd->add_option("--config", config_path, "key=value experiment file")->check(CLI::ExistingFile);
  bench_cmd->add_option("--problem", problem);
  bench_cmd->add_option("instances", instances, "Instance files")->check(CLI::ExistingFile);
  bench_cmd->add_option("--algo", algos)->delimiter(',');
  bench_cmd->add_option("--seeds", seeds)->delimiter(',');
  bench_cmd->add_option("--time-limit", time_limit);
  bench_cmd->add_option("--decode-budget", budget);
  bench_cmd->add_option("--hs", hs);
  bench_cmd->add_option("--he", he);
  bench_cmd->add_option("--clock", clock, "cpu or wall");
  bench_cmd->add_option("--workers", workers)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--bks", bks_items, "name=value")->delimiter(',');
  bench_cmd->add_option("--out", out, "CSV path (default stdout)");
  bench_cmd->add_flag("--summary", summary, "Print per-instance aggregates to stderr");

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "Build performance-profile data from result CSVs");
  std::vector<std::string> csvs;
  double accuracy = 1.0;
  profile_cmd->add_option("csv", csvs, "Result files from bench")->required()->check(CLI::ExistingFile);
  profile_cmd->add_option("--accuracy", accuracy, "Gap threshold in percent");
  profile_cmd->add_option("--bks", bks_items, "name=value")->delimiter(',');
  profile_cmd->add_option("--out", out, "TSV path (default stdout)");

  // generate-stn
  auto* stn_cmd = app.add_subcommand("generate-stn", "Write a Steiner triple covering instance");
  int order = 0;
  stn_cmd->add_option("order", order, "9*3^k or 15*3^k")->required();
  stn_cmd->add_option("--out", out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) {
      auto decoder = load_decoder(problem, instance);
      SolverParams params;
      params.algorithm = parse_algorithm(algo);
      params.seed = seed;
      params.time_limit = time_limit;
      params.max_decode_calls = budget;
      params.target_cost = target;
      params.h_start = hs;
      params.h_end = he;
      params.clock = (budget && !time_limit) ? ClockKind::DecodeBudget : parse_clock(clock);
      const RunRecord rec = solve(*decoder, params);
      const DecodedSolution best = decoder->decode(rec.best_keys);
      std::cout << best.artifact << "\n";
      std::printf("cost %.17g\ntime_to_best %.6f\nelapsed %.6f\ndecode_calls %lld\nrestarts %d\n", rec.best_cost,
                  rec.time_to_best, rec.elapsed, static_cast<long long>(rec.decode_calls), rec.restarts);
    } else if (*bench_cmd) {
      ExperimentConfig cfg;
      if (!config_path.empty()) cfg = ExperimentConfig::from_file(config_path);
      if (!problem.empty()) cfg.problem = problem;
      for (const auto& i : instances) cfg.instances.emplace_back(i);
      if (!algos.empty()) cfg.algorithms = parse_algorithms(algos);
      if (!seeds.empty()) cfg.seeds = seeds;
      if (time_limit) cfg.time_limit = time_limit;
      if (budget) cfg.decode_budget = budget;
      if (bench_cmd->count("--hs")) cfg.params.h_start = hs;
      if (bench_cmd->count("--he")) cfg.params.h_end = he;
      if (bench_cmd->count("--clock")) cfg.params.clock = parse_clock(clock);
      if (bench_cmd->count("--workers")) cfg.workers = workers;
      for (const auto& [name, v] : parse_bks(bks_items)) cfg.bks[name] = v;
      if (cfg.problem.empty()) throw std::invalid_argument("bench needs --problem or a config file");
      const ResultTable table = run_experiment(cfg);
      write_table(table, out, summary);
      for (const ResultRow& r : table.rows)
        if (!r.error.empty()) std::cerr << r.instance << " seed " << r.run.seed << ": " << r.error << "\n";
    } else if (*profile_cmd) {
      std::vector<ResultRow> rows;
      for (const auto& path : csvs) {
        auto part = read_results_csv(path);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      const auto aggregates = aggregate(rows, parse_bks(bks_items));
      const PerformanceProfile prof = performance_profile(aggregates, accuracy);
      if (out.empty() || out == "-")
        emit_profile_tsv(prof, std::cout);
      else
        emit_profile_tsv(prof, std::filesystem::path(out));
    } else if (*stn_cmd) {
      const StcpInstance inst = steiner_triple_system(order);
      if (out.empty() || out == "-") {
        write_stcp(std::cout, inst);
      } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        write_stcp(f, inst);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
