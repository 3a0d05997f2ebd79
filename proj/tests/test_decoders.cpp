#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "oracles.hpp"
#include "rkgrasp/problems/ncgpp.hpp"
#include "rkgrasp/problems/ssp.hpp"
#include "rkgrasp/problems/stcp.hpp"
#include "rkgrasp/problems/thlp.hpp"
#include "rkgrasp/problems/tsp.hpp"

using namespace rkgrasp;

namespace {

RandomKeys keys(std::initializer_list<double> v) {
  RandomKeys x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double k : v) x[i++] = k;
  return x;
}

// Keys whose ascending order is `perm`.
RandomKeys keys_for(const std::vector<int>& perm) {
  RandomKeys x(static_cast<Eigen::Index>(perm.size()));
  for (std::size_t r = 0; r < perm.size(); ++r) x[perm[r]] = (r + 0.5) / perm.size();
  return x;
}

StcpInstance fano() {
  return StcpInstance(7, {{0, 1, 2}, {1, 3, 5}, {0, 3, 4}, {0, 5, 6}, {2, 3, 6}, {1, 4, 6}});
}

}  // namespace

TEST_CASE("TSP decoder") {
  SUBCASE("triangle") {
    Matrix d(3, 3);
    d << 0, 3, 4, 3, 0, 5, 4, 5, 0;
    const TspTour t = decode_tsp(keys({0.9, 0.1, 0.5}), TspInstance{"tri", d});
    CHECK(t.cost == 12);
    CHECK(t.tour.size() == 3);
  }
  SUBCASE("equal keys keep index order") {
    Rng gen(1);
    const TspInstance inst{"t5", oracle::random_euclidean(5, gen)};
    const TspTour t = decode_tsp(RandomKeys::Constant(5, 0.3), inst);
    CHECK(t.tour[0] == 0);
    CHECK(t.cost == decode_tsp(keys({0.1, 0.2, 0.3, 0.4, 0.5}), inst).cost);
  }
  SUBCASE("cheapest insertion against a hand trace") {
    // Cities on a line at 0, 10, 1, 11; order 0,1,2,3.
    Matrix d(4, 4);
    const double pos[] = {0, 10, 1, 11};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) d(i, j) = std::abs(pos[i] - pos[j]);
    const TspTour t = decode_tsp(keys({0.1, 0.2, 0.3, 0.4}), TspInstance{"line", d});
    CHECK(t.cost == 22);
    CHECK(t.cost == oracle::closed_tour(t.tour, d));
  }
  SUBCASE("7 cities reach the brute-force optimum and never beat it") {
    Rng gen(7);
    const TspInstance inst{"t7", oracle::random_euclidean(7, gen)};
    const double opt = oracle::tsp_optimum(inst.distance);
    Rng rng(3);
    double best = kInfinity;
    for (int t = 0; t < 500; ++t) {
      const TspTour tour = decode_tsp(create_initial_solution(7, rng), inst);
      CHECK(tour.cost >= opt);
      CHECK(tour.cost == doctest::Approx(oracle::closed_tour(tour.tour, inst.distance)).epsilon(1e-12));
      std::vector<int> sorted = tour.tour;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
      best = std::min(best, tour.cost);
    }
    // the tour order itself is a valid key vector, and it decodes to the optimum
    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    double reach = kInfinity;
    do {
      reach = std::min(reach, decode_tsp(keys_for(perm), inst).cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(reach == opt);
    CHECK(best >= opt);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(TspDecoder(TspInstance{"two", Matrix::Zero(2, 2)}), std::invalid_argument);
    Matrix d = Matrix::Ones(3, 3);
    CHECK_THROWS_AS(TspDecoder(TspInstance{"diag", d}), std::invalid_argument);
  }
}

TEST_CASE("SSP decoder") {
  SUBCASE("keys to job sequence") {
    SspInstance::ToolMatrix a = SspInstance::ToolMatrix::Zero(5, 3);
    a.col(0).setOnes();
    const SspInstance inst(a, 2);
    const SspSequence s = decode_ssp(keys({0.23, 0.56, 0.54, 0.41, 0.78}), inst);
    CHECK(s.jobs == std::vector<int>{0, 3, 2, 1, 4});
    CHECK(s.cost == 0);
  }
  SUBCASE("single job") {
    SspInstance::ToolMatrix a(1, 4);
    a << 1, 1, 0, 1;
    CHECK(decode_ssp(keys({0.5}), SspInstance(a, 3)).cost == 0);
  }
  SUBCASE("magazine as large as the tool set") {
    Rng gen(2);
    const SspInstance base = oracle::random_ssp(6, 5, 4, gen);
    const SspInstance roomy(base.matrix(), 5);
    std::vector<int> seq{5, 1, 3, 0, 2, 4};
    CHECK(ktns_switches(seq, roomy) == 0);
  }
  SUBCASE("KTNS matches the eviction DP") {
    Rng gen(3);
    for (int t = 0; t < 200; ++t) {
      const SspInstance inst = oracle::random_ssp(5, 8, 4, gen);
      std::vector<int> seq(5);
      std::iota(seq.begin(), seq.end(), 0);
      gen.shuffle(std::span<int>(seq));
      CHECK(ktns_switches(seq, inst) == oracle::ktns_dp(seq, inst));
    }
  }
  SUBCASE("best decode equals the permutation optimum") {
    Rng gen(4);
    const SspInstance inst = oracle::random_ssp(6, 8, 4, gen);
    const int opt = oracle::ssp_optimum(inst, [&](const std::vector<int>& s) { return oracle::ktns_dp(s, inst); });
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    int best = 1 << 30;
    do {
      best = std::min(best, decode_ssp(keys_for(perm), inst).cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(best == opt);
  }
  SUBCASE("validation") {
    SspInstance::ToolMatrix a(1, 3);
    a << 1, 1, 1;
    CHECK_THROWS_AS(SspInstance(a, 2), std::invalid_argument);
    a << 1, 2, 0;
    CHECK_THROWS_AS(SspInstance(a, 3), std::invalid_argument);
  }
}

TEST_CASE("STCP decoder") {
  SUBCASE("Fano fixture reaches the minimum cover") {
    const StcpInstance inst = fano();
    const StcpCover c = decode_stcp(keys({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7}), inst);
    CHECK(is_cover(c.columns, inst));
    CHECK(c.cost == oracle::stcp_min_cover(inst));
  }
  SUBCASE("one column covers everything") {
    const StcpInstance inst(5, {{0, 1, 2}, {0, 3, 4}, {0, 1, 4}});
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
      const StcpCover c = decode_stcp(create_initial_solution(5, rng), inst);
      CHECK(is_cover(c.columns, inst));
      CHECK(c.cost <= 2);
    }
    const StcpCover first = decode_stcp(keys({0.1, 0.5, 0.6, 0.7, 0.8}), inst);
    CHECK(first.cost == 1);
    CHECK(first.columns == std::vector<int>{0});
  }
  SUBCASE("covers are valid and single-removal minimal") {
    Rng gen(5);
    const StcpInstance inst = fano();
    for (int t = 0; t < 300; ++t) {
      const StcpCover c = decode_stcp(create_initial_solution(7, gen), inst);
      CHECK(c.cost == static_cast<int>(c.columns.size()));
      CHECK(is_cover(c.columns, inst));
      for (std::size_t k = 0; k < c.columns.size(); ++k) {
        std::vector<int> less = c.columns;
        less.erase(less.begin() + static_cast<long>(k));
        CHECK_FALSE(is_cover(less, inst));
      }
    }
  }
  SUBCASE("matches a counter-based reference on random triple systems") {
    Rng gen(17);
    for (int t = 0; t < 200; ++t) {
      const int cols = gen.between(3, 20);
      const int rows = gen.between(1, 150);
      std::vector<StcpInstance::Triple> triples;
      for (int r = 0; r < rows; ++r) {
        std::vector<int> pick(static_cast<std::size_t>(cols));
        std::iota(pick.begin(), pick.end(), 0);
        gen.shuffle(std::span<int>(pick));
        triples.push_back({pick[0], pick[1], pick[2]});
      }
      const StcpInstance inst(cols, triples);
      for (int k = 0; k < 5; ++k) {
        const RandomKeys x = create_initial_solution(cols, gen);
        CHECK(decode_stcp(x, inst).columns == oracle::stcp_greedy(x, inst));
      }
    }
  }
  SUBCASE("Steiner flag checks the pair property") {
    CHECK_NOTHROW(StcpInstance(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}, true));
    CHECK_THROWS_AS(StcpInstance(7, fano().triples(), true), std::invalid_argument);
    CHECK_THROWS_AS(StcpInstance(3, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(StcpInstance(3, {{0, 1, 3}}), std::invalid_argument);
  }
}

TEST_CASE("NCGPP decoder") {
  NcgppInstance walk;
  walk.traffic = Eigen::VectorXd::Constant(6, 10.0);
  walk.capacity = Eigen::VectorXd::Constant(2, 40.0);
  walk.handover.resize(6, 6);
  walk.handover << 0, 25, 15, 0, 0, 0,  //
      25, 0, 40, 0, 56, 7,              //
      10, 40, 0, 0, 0, 0,               //
      0, 0, 0, 0, 100, 80,              //
      0, 60, 0, 91, 0, 75,              //
      0, 6, 0, 77, 75, 0;

  SUBCASE("walkthrough") {
    // station order 2,4,5,3,6,1 and x_n = 0.7
    const RandomKeys x = keys({0.6, 0.1, 0.4, 0.2, 0.3, 0.5, 0.7});
    const NcgppAssignment a = decode_ncgpp(x, walk);
    CHECK(a.rnc_of == std::vector<int>{0, 0, 0, 1, 1, 1});
    CHECK(a.unassigned == 0);
    CHECK(a.cost == oracle::ncgpp_value(a.rnc_of, walk));
  }
  SUBCASE("single roomy RNC has no cut") {
    NcgppInstance one = walk;
    one.capacity = Eigen::VectorXd::Constant(1, 1e9);
    Rng rng(1);
    for (int t = 0; t < 20; ++t) CHECK(decode_ncgpp(create_initial_solution(7, rng), one).cost == 0.0);
  }
  SUBCASE("decoded costs bound the partition optimum from above") {
    Rng gen(6);
    const NcgppInstance inst = oracle::random_ncgpp(8, 3, gen);
    const double opt = oracle::ncgpp_optimum(inst);
    double best = kInfinity;
    for (int t = 0; t < 2000; ++t) {
      const NcgppAssignment a = decode_ncgpp(create_initial_solution(9, gen), inst);
      CHECK(a.cost >= opt);
      CHECK(a.cost == oracle::ncgpp_value(a.rnc_of, inst));
      CHECK(oracle::ncgpp_feasible(a.rnc_of, inst));
      CHECK((a.unassigned > 0) == (a.cost >= inst.penalty()));
      best = std::min(best, a.cost);
    }
    CHECK(best >= opt);
  }
  SUBCASE("stations that fit nowhere are priced") {
    NcgppInstance tight = walk;
    tight.capacity = Eigen::VectorXd::Constant(2, 15.0);
    const NcgppAssignment a = decode_ncgpp(keys({0.6, 0.1, 0.4, 0.2, 0.3, 0.5, 0.7}), tight);
    CHECK(a.unassigned == 4);
    CHECK(a.cost == oracle::ncgpp_value(a.rnc_of, tight));
  }
  SUBCASE("validation") {
    NcgppInstance bad = walk;
    bad.handover(0, 0) = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = walk;
    bad.capacity[0] = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }
}

TEST_CASE("THLP decoder") {
  CHECK(thlp_dimension(10, 3) == 10 + 7 + 3);
  Rng gen(20);
  SUBCASE("tree and cost against explicit path routing") {
    const ThlpInstance inst = oracle::random_thlp(20, 4, gen);
    for (int t = 0; t < 100; ++t) {
      const ThlpSolution s = decode_thlp(create_initial_solution(thlp_dimension(20, 4), gen), inst);
      CHECK(s.hubs.size() == 4);
      CHECK(s.tree_edges.size() == 3);
      for (int i = 0; i < 20; ++i) CHECK(std::find(s.hubs.begin(), s.hubs.end(), s.hub_of[i]) != s.hubs.end());
      for (int h : s.hubs) CHECK(s.hub_of[h] == h);
      CHECK(s.cost == doctest::Approx(oracle::thlp_value(s, inst)).epsilon(1e-9));
    }
  }
  SUBCASE("single hub routes everything through it") {
    ThlpInstance inst = oracle::random_thlp(6, 1, gen);
    const ThlpSolution s = decode_thlp(create_initial_solution(thlp_dimension(6, 1), gen), inst);
    CHECK(s.tree_edges.empty());
    for (int i = 0; i < 6; ++i) CHECK(s.hub_of[i] == s.hubs[0]);
    CHECK(s.cost == doctest::Approx(oracle::thlp_value(s, inst)));
  }
  SUBCASE("segment two maps keys to hub slots") {
    ThlpInstance inst = oracle::random_thlp(5, 2, gen);
    // hubs: nodes 3 and 1 (keys 0.1, 0.2); non-hubs 0, 2, 4 take slots 1, 0, 1
    const RandomKeys x = keys({0.5, 0.2, 0.6, 0.1, 0.7, 0.9, 0.2, clamp_key(1.0), 0.3});
    const ThlpSolution s = decode_thlp(x, inst);
    CHECK(s.hubs == std::vector<int>{3, 1});
    CHECK(s.hub_of == std::vector<int>{1, 1, 3, 3, 1});
    CHECK(s.tree_edges.size() == 1);
  }
  SUBCASE("validation") {
    ThlpInstance inst = oracle::random_thlp(5, 2, gen);
    CHECK_THROWS_AS(decode_thlp(RandomKeys::Zero(3), inst), std::invalid_argument);
    inst.discount = 0.0;
    CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
  }
}

TEST_CASE("decoders are deterministic and never touch the keys") {
  Rng gen(30);
  std::vector<std::unique_ptr<Decoder>> all;
  all.push_back(std::make_unique<TspDecoder>(TspInstance{"t", oracle::random_euclidean(9, gen)}));
  all.push_back(std::make_unique<SspDecoder>(oracle::random_ssp(6, 8, 4, gen)));
  all.push_back(std::make_unique<StcpDecoder>(fano()));
  all.push_back(std::make_unique<NcgppDecoder>(oracle::random_ncgpp(7, 3, gen)));
  all.push_back(std::make_unique<ThlpDecoder>(oracle::random_thlp(8, 3, gen)));
  for (const auto& dec : all) {
    CAPTURE(dec->problem());
    for (int t = 0; t < 100; ++t) {
      const RandomKeys x = create_initial_solution(dec->dimension(), gen);
      const RandomKeys copy = x;
      const DecodedSolution a = dec->decode(x);
      const DecodedSolution b = dec->decode(x);
      CHECK(x == copy);
      CHECK(a.cost == b.cost);
      CHECK(a.artifact == b.artifact);
      CHECK(a.cost == dec->cost(x));
    }
  }
}

TEST_CASE("permutation invariance of order-based encodings") {
  Rng gen(31);
  TspDecoder tsp(TspInstance{"t", oracle::random_euclidean(8, gen)});
  SspDecoder ssp(oracle::random_ssp(6, 8, 4, gen));
  for (int t = 0; t < 100; ++t) {
    for (const Decoder* dec : {static_cast<const Decoder*>(&tsp), static_cast<const Decoder*>(&ssp)}) {
      const RandomKeys x = create_initial_solution(dec->dimension(), gen);
      const RandomKeys y = keys_for(argsort(x));
      CHECK(dec->decode(x).artifact == dec->decode(y).artifact);
      CHECK(dec->cost(x) == dec->cost(y));
    }
  }
}
