#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rkgrasp/bench.hpp"

using namespace rkgrasp;

namespace {

const std::filesystem::path kData = RKGRASP_DATA_DIR;

Aggregate agg(std::string inst, std::string algo, double gap, double time) {
  Aggregate a;
  a.instance = std::move(inst);
  a.algorithm = std::move(algo);
  a.runs = 1;
  a.gap = gap;
  a.best = 1.0;
  a.mean_time_to_best = time;
  return a;
}

std::vector<BenchInstance> small_tsp_suite(int count, int n, std::uint64_t seed) {
  Rng gen(seed);
  std::vector<BenchInstance> out;
  for (int k = 0; k < count; ++k) {
    const std::string name = "r" + std::to_string(k);
    out.push_back({name, std::make_shared<TspDecoder>(TspInstance{name, oracle::random_euclidean(n, gen)}), {}});
  }
  return out;
}

SolverParams budget(std::int64_t calls) {
  SolverParams p;
  p.max_decode_calls = calls;
  p.clock = ClockKind::DecodeBudget;
  return p;
}

std::string csv_of(const ResultTable& t) {
  std::ostringstream os;
  emit_csv(t, os);
  return os.str();
}

}  // namespace

TEST_CASE("rpd") {
  CHECK(rpd(61, 61) == 0.0);
  CHECK(rpd(104, 103) == doctest::Approx(0.9709).epsilon(1e-4));
  CHECK(rpd(90, 100) == -10.0);
  CHECK_THROWS_AS(rpd(1, 0), std::domain_error);
  CHECK_THROWS_AS(rpd(1, -2), std::domain_error);
}

TEST_CASE("aggregates") {
  std::vector<ResultRow> rows(4);
  const double costs[] = {104, 103, 105, 104};
  for (int k = 0; k < 4; ++k) {
    rows[k].instance = "stn135";
    rows[k].run.algorithm = "rk-grasp-rvnd";
    rows[k].run.best_cost = costs[k];
    rows[k].run.time_to_best = k;
  }
  const auto a = aggregate(rows, {{"stn135", 103.0}});
  REQUIRE(a.size() == 1);
  CHECK(a[0].runs == 4);
  CHECK(a[0].best == 103);
  CHECK(a[0].average == 104);
  CHECK(a[0].gap == 0.0);
  CHECK(a[0].arpd == doctest::Approx((rpd(104, 103) * 2 + rpd(105, 103)) / 4));
  CHECK(a[0].mean_time_to_best == 1.5);
  for (const auto& r : rows) CHECK(a[0].gap <= rpd(r.run.best_cost, 103));

  // no BKS: the best over all algorithms becomes the reference
  rows[1].run.algorithm = "multi-start";
  const auto b = aggregate(rows);
  REQUIRE(b.size() == 2);
  CHECK(b[0].reference == 103);
  CHECK(b[1].gap == 0.0);
}

TEST_CASE("performance profile") {
  SUBCASE("two algorithms with swapped times") {
    const std::vector<Aggregate> a = {agg("i1", "A", 0, 1), agg("i2", "A", 0, 2), agg("i1", "B", 0, 2),
                                      agg("i2", "B", 0, 1)};
    const PerformanceProfile p = performance_profile(a);
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(p.rho(k, 1.0) == 0.5);
      CHECK(p.rho(k, 2.0) == 1.0);
    }
  }
  SUBCASE("single algorithm") {
    const std::vector<Aggregate> a = {agg("i1", "A", 0, 3), agg("i2", "A", 0.5, 7)};
    const PerformanceProfile p = performance_profile(a);
    CHECK((p.ratios.array() == 1.0).all());
    CHECK(p.rho(0, 1.0) == 1.0);
  }
  SUBCASE("inaccurate everywhere") {
    const std::vector<Aggregate> a = {agg("i1", "A", 0, 3), agg("i1", "B", 5, 1), agg("i2", "A", 0, 3),
                                      agg("i2", "B", 2, 1)};
    const PerformanceProfile p = performance_profile(a);
    for (double tau : {1.0, 2.0, 1e6}) CHECK(p.rho(1, tau) == 0.0);
    CHECK(p.rho(0, 1.0) == 1.0);
  }
  SUBCASE("mismatched instance sets") {
    const std::vector<Aggregate> a = {agg("i1", "A", 0, 1), agg("i2", "A", 0, 1), agg("i1", "B", 0, 1)};
    CHECK_THROWS_AS(performance_profile(a), std::invalid_argument);
  }
  SUBCASE("rho is a monotone step function in [0,1]") {
    Rng rng(5);
    std::vector<Aggregate> a;
    for (int i = 0; i < 30; ++i)
      for (const char* name : {"A", "B", "C"})
        a.push_back(agg("i" + std::to_string(i), name, rng.uniform(0, 2), rng.uniform(0.01, 10)));
    const PerformanceProfile p = performance_profile(a);
    for (std::size_t k = 1; k < p.points.size(); ++k) {
      CHECK(p.points[k].rho >= 0.0);
      CHECK(p.points[k].rho <= 1.0);
      if (p.points[k].algorithm == p.points[k - 1].algorithm) {
        CHECK(p.points[k].tau > p.points[k - 1].tau);
        CHECK(p.points[k].rho >= p.points[k - 1].rho);
      }
    }
  }
}

TEST_CASE("experiment runs and CSV") {
  const auto suite = small_tsp_suite(1, 8, 1);
  const std::vector<Algorithm> algos = {Algorithm::GraspRvnd};
  const std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  const ResultTable t = run_experiment(suite, algos, seeds, budget(2000));
  CHECK(t.rows.size() == 5);
  CHECK(t.aggregates.size() == 1);
  for (std::size_t k = 0; k < 5; ++k) CHECK(t.rows[k].run.seed == seeds[k]);

  const std::string csv = csv_of(t);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  CHECK(csv.rfind("problem,instance,algo,seed,best_cost,time_to_best_s,wall_s,decode_calls\n", 0) == 0);
  CHECK(csv == csv_of(run_experiment(suite, algos, seeds, budget(2000))));
  CHECK(csv == csv_of(run_experiment(suite, algos, seeds, budget(2000), 4)));

  ResultTable two;
  two.rows.assign(t.rows.begin(), t.rows.begin() + 2);
  const std::string c2 = csv_of(two);
  CHECK(std::count(c2.begin(), c2.end(), '\n') == 3);
  CHECK(csv_of(ResultTable{}) == "problem,instance,algo,seed,best_cost,time_to_best_s,wall_s,decode_calls\n");

  const auto path = std::filesystem::temp_directory_path() / "rkgrasp_test_results.csv";
  emit_csv(t, path);
  const auto back = read_results_csv(path);
  REQUIRE(back.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(back[k].run.best_cost == t.rows[k].run.best_cost);
    CHECK(back[k].run.decode_calls == t.rows[k].run.decode_calls);
  }
  std::filesystem::remove(path);
  CHECK_THROWS_AS(emit_csv(t, std::filesystem::path("/nonexistent-dir/x.csv")), std::runtime_error);
}

TEST_CASE("a failing run becomes an error row") {
  class Broken final : public Decoder {
   public:
    int dimension() const override { return 3; }
    double cost(const RandomKeys&) const override { throw std::runtime_error("boom"); }
    DecodedSolution decode(const RandomKeys&) const override { return {}; }
    std::string_view problem() const override { return "broken"; }
    int natural_size() const override { return 3; }
  };
  std::vector<BenchInstance> suite = small_tsp_suite(1, 6, 2);
  suite.push_back({"bad", std::make_shared<Broken>(), {}});
  const std::vector<Algorithm> algos = {Algorithm::MultiStart};
  const std::vector<std::uint64_t> seeds = {1};
  const ResultTable t = run_experiment(suite, algos, seeds, budget(100));
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].error.empty());
  CHECK(t.rows[1].error == "boom");
  CHECK(csv_of(t).find("broken,bad,multi-start,1,inf,") != std::string::npos);
}

TEST_CASE("time limit override is honoured") {
  const auto suite = small_tsp_suite(1, 40, 3);
  SolverParams p;
  p.time_limit = 0.2;
  const std::vector<Algorithm> algos = {Algorithm::GraspRvnd};
  const std::vector<std::uint64_t> seeds = {1, 2};
  const ResultTable t = run_experiment(suite, algos, seeds, p);
  for (const auto& r : t.rows) CHECK(r.run.elapsed < 0.2 + 1.0);
}

TEST_CASE("config file") {
  const auto dir = std::filesystem::temp_directory_path() / "rkgrasp_cfg";
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(kData / "ssp5.txt", dir / "ssp5.txt", std::filesystem::copy_options::overwrite_existing);
  {
    std::ofstream f(dir / "exp.cfg");
    f << "# tiny experiment\nproblem = ssp\ninstances = ssp5.txt\nalgo = rk-grasp-rvnd, multi-start\n"
         "seeds = 1,2\ndecode-budget = 500\nhs = 0.25\nbks.ssp5 = 5\n";
  }
  const ExperimentConfig cfg = ExperimentConfig::from_file(dir / "exp.cfg");
  CHECK(cfg.problem == "ssp");
  CHECK(cfg.algorithms.size() == 2);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2});
  CHECK(cfg.params.h_start == 0.25);
  CHECK(cfg.bks.at("ssp5") == 5.0);
  const ResultTable t = run_experiment(cfg);
  CHECK(t.rows.size() == 4);
  CHECK(t.aggregates.size() == 2);
  CHECK(t.aggregates[0].reference == 5.0);
  for (const auto& r : t.rows) CHECK(r.run.decode_calls >= 500);

  {
    std::ofstream f(dir / "bad.cfg");
    f << "problem = ssp\nwhat = 3\n";
  }
  CHECK_THROWS_WITH_AS(ExperimentConfig::from_file(dir / "bad.cfg"), doctest::Contains("bad.cfg:2:"),
                       std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("load_decoder") {
  CHECK(load_decoder("stcp", kData / "fano.stn")->dimension() == 7);
  CHECK(load_decoder("ncgpp", kData / "ncgpp6.txt")->dimension() == 7);
  CHECK(load_decoder("thlp", kData / "thlp10.txt")->dimension() == thlp_dimension(10, 3));
  CHECK_THROWS_AS(load_decoder("vrp", kData / "fano.stn"), std::invalid_argument);
}
