#include "rkgrasp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rkgrasp/io.hpp"

namespace rkgrasp {

std::unique_ptr<Decoder> load_decoder(std::string_view problem, const std::filesystem::path& path) {
  if (problem == "tsp") return std::make_unique<TspDecoder>(parse_tsplib(path));
  if (problem == "thlp") return std::make_unique<ThlpDecoder>(parse_thlp(path));
  if (problem == "stcp") return std::make_unique<StcpDecoder>(parse_stcp(path));
  if (problem == "ncgpp") return std::make_unique<NcgppDecoder>(parse_ncgpp(path));
  if (problem == "ssp") return std::make_unique<SspDecoder>(parse_ssp(path));
  throw std::invalid_argument("unknown problem '" + std::string(problem) + "'");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  if (s == "inf") return kInfinity;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::runtime_error("invalid " + what + " '" + s + "'");
  return v;
}

std::int64_t to_int(const std::string& s, const std::string& what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::runtime_error("invalid " + what + " '" + s + "'");
  return v;
}

// Shortest round-trip representation.
std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_seconds(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  ExperimentConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "problem") {
        cfg.problem = value;
      } else if (key == "instances" || key == "instance") {
        for (const auto& p : split(value, ','))
          if (!p.empty()) cfg.instances.emplace_back(path.parent_path() / p);
      } else if (key == "algo") {
        cfg.algorithms.clear();
        for (const auto& a : split(value, ',')) cfg.algorithms.push_back(parse_algorithm(a));
      } else if (key == "seeds") {
        cfg.seeds.clear();
        for (const auto& s : split(value, ',')) cfg.seeds.push_back(static_cast<std::uint64_t>(to_int(s, "seed")));
      } else if (key == "time-limit") {
        cfg.time_limit = to_double(value, "time limit");
      } else if (key == "decode-budget") {
        cfg.decode_budget = to_int(value, "decode budget");
      } else if (key == "hs") {
        cfg.params.h_start = to_double(value, "hs");
      } else if (key == "he") {
        cfg.params.h_end = to_double(value, "he");
      } else if (key == "workers") {
        cfg.workers = static_cast<unsigned>(to_int(value, "workers"));
      } else if (key == "clock") {
        if (value == "cpu") cfg.params.clock = ClockKind::ThreadCpu;
        else if (value == "wall") cfg.params.clock = ClockKind::Wall;
        else throw std::runtime_error("clock must be cpu or wall");
      } else if (key.rfind("bks.", 0) == 0) {
        cfg.bks[key.substr(4)] = to_double(value, "bks");
      } else {
        throw std::runtime_error("unknown key '" + key + "'");
      }
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (cfg.problem.empty()) throw std::runtime_error(path.string() + ": missing 'problem'");
  if (cfg.instances.empty()) throw std::runtime_error(path.string() + ": no instances");
  if (cfg.seeds.empty()) throw std::runtime_error(path.string() + ": no seeds");
  return cfg;
}

double rpd(double found, double bks) {
  if (!(bks > 0.0)) throw std::domain_error("rpd: best-known value must be positive");
  return 100.0 * (found - bks) / bks;
}

std::vector<Aggregate> aggregate(std::span<const ResultRow> rows, const std::map<std::string, double>& bks) {
  std::vector<Aggregate> out;
  std::map<std::string, double> best_overall;
  for (const ResultRow& r : rows) {
    if (!r.error.empty()) continue;
    auto [it, fresh] = best_overall.try_emplace(r.instance, r.run.best_cost);
    if (!fresh) it->second = std::min(it->second, r.run.best_cost);
  }

  auto find = [&](const ResultRow& r) {
    return std::find_if(out.begin(), out.end(), [&](const Aggregate& a) {
      return a.instance == r.instance && a.algorithm == r.run.algorithm;
    });
  };
  std::vector<double> sums;
  std::vector<double> rpd_sums;
  std::vector<double> ttb_sums;
  for (const ResultRow& r : rows) {
    auto it = find(r);
    if (it == out.end()) {
      Aggregate a;
      a.instance = r.instance;
      a.algorithm = r.run.algorithm;
      const auto known = bks.find(r.instance);
      if (known != bks.end())
        a.reference = known->second;
      else if (const auto b = best_overall.find(r.instance); b != best_overall.end())
        a.reference = b->second;
      out.push_back(a);
      sums.push_back(0.0);
      rpd_sums.push_back(0.0);
      ttb_sums.push_back(0.0);
      it = out.end() - 1;
    }
    const auto k = static_cast<std::size_t>(it - out.begin());
    const double cost = r.error.empty() ? r.run.best_cost : kInfinity;
    ++it->runs;
    it->best = std::min(it->best, cost);
    sums[k] += cost;
    ttb_sums[k] += r.run.time_to_best;
    rpd_sums[k] += it->reference > 0.0 ? rpd(cost, it->reference) : std::nan("");
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    Aggregate& a = out[k];
    a.average = sums[k] / a.runs;
    a.mean_time_to_best = ttb_sums[k] / a.runs;
    a.arpd = rpd_sums[k] / a.runs;
    a.gap = a.reference > 0.0 ? rpd(a.best, a.reference) : std::nan("");
  }
  return out;
}

ResultTable run_experiment(std::span<const BenchInstance> instances, std::span<const Algorithm> algorithms,
                           std::span<const std::uint64_t> seeds, const SolverParams& base, unsigned workers) {
  struct Job {
    std::size_t instance;
    Algorithm algorithm;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (Algorithm a : algorithms)
      for (std::uint64_t s : seeds) jobs.push_back({i, a, s});

  ResultTable table;
  table.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const Job& job = jobs[k];
      const BenchInstance& inst = instances[job.instance];
      ResultRow& row = table.rows[k];  // each slot is written by exactly one worker
      row.problem = std::string(inst.decoder->problem());
      row.instance = inst.name;
      row.budget_mode = base.clock == ClockKind::DecodeBudget;
      SolverParams params = base;
      params.algorithm = job.algorithm;
      params.seed = job.seed;
      try {
        row.run = solve(*inst.decoder, params);
      } catch (const std::exception& e) {
        row.run.algorithm = std::string(to_string(job.algorithm));
        row.run.seed = job.seed;
        row.error = e.what();
      }
      row.run.instance = inst.name;
    }
  };

  const unsigned n_workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }

  std::map<std::string, double> bks;
  for (const BenchInstance& i : instances)
    if (i.bks) bks[i.name] = *i.bks;
  table.aggregates = aggregate(table.rows, bks);
  return table;
}

ResultTable run_experiment(const ExperimentConfig& config) {
  if (config.seeds.empty()) throw std::invalid_argument("experiment needs at least one seed");
  if (config.instances.empty()) throw std::invalid_argument("experiment needs at least one instance");
  std::vector<BenchInstance> instances;
  for (const auto& path : config.instances) {
    BenchInstance b;
    b.name = path.stem().string();
    b.decoder = load_decoder(config.problem, path);
    if (const auto it = config.bks.find(b.name); it != config.bks.end()) b.bks = it->second;
    instances.push_back(std::move(b));
  }
  SolverParams params = config.params;
  params.time_limit = config.time_limit;
  params.max_decode_calls = config.decode_budget;
  if (config.decode_budget && !config.time_limit) params.clock = ClockKind::DecodeBudget;
  return run_experiment(instances, config.algorithms, config.seeds, params, config.workers);
}

double PerformanceProfile::rho(std::size_t algorithm, double tau) const {
  if (ratios.rows() == 0) return 0.0;
  return static_cast<double>((ratios.col(static_cast<Eigen::Index>(algorithm)).array() <= tau).count()) /
         static_cast<double>(ratios.rows());
}

PerformanceProfile performance_profile(std::span<const Aggregate> aggregates, double accuracy_pct) {
  PerformanceProfile prof;
  for (const Aggregate& a : aggregates) {
    if (std::find(prof.instances.begin(), prof.instances.end(), a.instance) == prof.instances.end())
      prof.instances.push_back(a.instance);
    if (std::find(prof.algorithms.begin(), prof.algorithms.end(), a.algorithm) == prof.algorithms.end())
      prof.algorithms.push_back(a.algorithm);
  }
  const auto ni = static_cast<Eigen::Index>(prof.instances.size());
  const auto na = static_cast<Eigen::Index>(prof.algorithms.size());
  Eigen::MatrixXd times = Eigen::MatrixXd::Constant(ni, na, std::nan(""));
  for (const Aggregate& a : aggregates) {
    const auto i = std::find(prof.instances.begin(), prof.instances.end(), a.instance) - prof.instances.begin();
    const auto k = std::find(prof.algorithms.begin(), prof.algorithms.end(), a.algorithm) - prof.algorithms.begin();
    if (!std::isnan(times(i, k))) throw std::invalid_argument("performance_profile: duplicate aggregate for " + a.instance);
    const bool converged = !std::isnan(a.gap) && a.gap <= accuracy_pct && std::isfinite(a.best);
    times(i, k) = converged ? std::max(a.mean_time_to_best, 1e-9) : kInfinity;
  }
  if (times.array().isNaN().any())
    throw std::invalid_argument("performance_profile: algorithms were run on different instance sets");

  prof.ratios = Eigen::MatrixXd::Constant(ni, na, kInfinity);
  std::set<double> taus = {1.0};
  for (Eigen::Index i = 0; i < ni; ++i) {
    const double fastest = times.row(i).minCoeff();
    if (!std::isfinite(fastest)) continue;
    for (Eigen::Index k = 0; k < na; ++k) {
      if (!std::isfinite(times(i, k))) continue;
      prof.ratios(i, k) = times(i, k) / fastest;
      taus.insert(prof.ratios(i, k));
    }
  }
  for (Eigen::Index k = 0; k < na; ++k)
    for (double tau : taus) prof.points.push_back({prof.algorithms[k], tau, prof.rho(k, tau)});
  return prof;
}

void emit_csv(const ResultTable& table, std::ostream& out) {
  out << "problem,instance,algo,seed,best_cost,time_to_best_s,wall_s,decode_calls\n";
  for (const ResultRow& r : table.rows) {
    out << r.problem << ',' << r.instance << ',' << r.run.algorithm << ',' << r.run.seed << ','
        << (r.error.empty() ? format_number(r.run.best_cost) : "inf") << ',' << format_seconds(r.run.time_to_best)
        << ',' << format_seconds(r.reported_wall()) << ',' << r.run.decode_calls << '\n';
  }
}

namespace {

std::ofstream create(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("I/O error writing " + path.string());
}

}  // namespace

void emit_csv(const ResultTable& table, const std::filesystem::path& path) {
  std::ofstream out = create(path);
  emit_csv(table, out);
  finish(out, path);
}

void emit_summary_csv(std::span<const Aggregate> aggregates, std::ostream& out) {
  out << "instance,algo,runs,reference,best,avrg,gap_pct,arpd_pct,time_s\n";
  for (const Aggregate& a : aggregates) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f,%.3f", a.gap, a.arpd, a.mean_time_to_best);
    out << a.instance << ',' << a.algorithm << ',' << a.runs << ',' << format_number(a.reference) << ','
        << format_number(a.best) << ',' << format_number(a.average) << ',' << buf << '\n';
  }
}

void emit_profile_tsv(const PerformanceProfile& profile, std::ostream& out) {
  out << "algo\ttau\trho\n";
  for (const ProfilePoint& p : profile.points)
    out << p.algorithm << '\t' << format_number(p.tau) << '\t' << format_number(p.rho) << '\n';
}

void emit_profile_tsv(const PerformanceProfile& profile, const std::filesystem::path& path) {
  std::ofstream out = create(path);
  emit_profile_tsv(profile, out);
  finish(out, path);
}

std::vector<ResultRow> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open results " + path.string());
  std::string line;
  if (!std::getline(in, line) || trim(line) != "problem,instance,algo,seed,best_cost,time_to_best_s,wall_s,decode_calls")
    throw std::runtime_error(path.string() + ":1: unexpected CSV header");
  std::vector<ResultRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected 8 fields");
    try {
      ResultRow r;
      r.problem = f[0];
      r.instance = f[1];
      r.run.instance = f[1];
      r.run.algorithm = f[2];
      r.run.seed = static_cast<std::uint64_t>(to_int(f[3], "seed"));
      r.run.best_cost = to_double(f[4], "best_cost");
      r.run.time_to_best = to_double(f[5], "time_to_best_s");
      r.run.wall_seconds = r.run.elapsed = to_double(f[6], "wall_s");
      r.run.decode_calls = to_int(f[7], "decode_calls");
      rows.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace rkgrasp
