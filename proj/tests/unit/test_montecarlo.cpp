#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "lightsout/enumeration.hpp"
#include "lightsout/montecarlo.hpp"
#include "lightsout/stats.hpp"

using namespace lightsout;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

int fields(const std::string& line) { return 1 + static_cast<int>(std::count(line.begin(), line.end(), ',')); }

}  // namespace

TEST_CASE("margin of error") {
  CHECK(margin_of_error(500000, 1000000) == doctest::Approx(0.00098).epsilon(1e-6));
  CHECK(margin_of_error(0, 1000) == 0.0);
  CHECK(margin_of_error(1000, 1000) == 0.0);
  CHECK(margin_of_error(38500, 1000000) == doctest::Approx(0.000377).epsilon(0.005));
  CHECK_THROWS(margin_of_error(0, 0));
}

TEST_CASE("table formats") {
  CHECK(emit_table({}, TableFormat::csv) == "n,e,trials,successes,p_hat,moe95\n");
  Estimate one{8, 10, 100000, 34395, 0.34395, margin_of_error(34395, 100000)};
  const auto csv = lines_of(emit_table({one}, TableFormat::csv));
  REQUIRE(csv.size() == 2);
  CHECK(fields(csv[1]) == 6);
  CHECK(csv[1] == "8,10,100000,34395,0.343950,0.002944");
  const auto series = lines_of(emit_table({one}, TableFormat::series));
  CHECK(series[1] == "10 0.343950");
  CHECK(parse_table_format("text") == TableFormat::text);
  CHECK_THROWS(parse_table_format("xml"));

  std::vector<Estimate> rows;
  for (int e = 1; e <= 54; ++e) rows.push_back({11, e, 10, 0, 0.0, 0.0});
  CHECK(lines_of(emit_table(rows, TableFormat::csv)).size() == 55);
  // Three column groups of 18 rows.
  const auto text = lines_of(emit_table(rows, TableFormat::text));
  CHECK(text.size() == 19);
}

TEST_CASE("default edge range and validation") {
  ExperimentConfig config;
  config.n = 5;
  config.trials = 10;
  config.seed = 3;
  const auto est = run_experiment(config);
  REQUIRE(est.size() == 9);
  for (int k = 0; k < 9; ++k) {
    CHECK(est[k].e == k + 1);
    CHECK(est[k].trials == 10);
    CHECK(est[k].p_hat >= 0.0);
    CHECK(est[k].p_hat <= 1.0);
  }
  config.edges = {11};
  CHECK_THROWS(run_experiment(config));
  config.edges = {2};
  config.trials = 0;
  CHECK_THROWS(run_experiment(config));
}

TEST_CASE("worker count does not change the output") {
  ExperimentConfig config;
  config.n = 8;
  config.trials = 1000;
  config.seed = 42;
  config.workers = 1;
  const std::string one = emit_table(run_experiment(config), TableFormat::csv);
  for (int w : {2, 3, 8}) {
    config.workers = w;
    CHECK(emit_table(run_experiment(config), TableFormat::csv) == one);
  }
  config.seed = 43;
  CHECK(emit_table(run_experiment(config), TableFormat::csv) != one);
}

TEST_CASE("zero region") {
  for (int n = 3; n <= 13; ++n) {
    ExperimentConfig config;
    config.n = n;
    config.trials = 2000;
    config.seed = 5;
    const int pairs = pair_count(n);
    config.edges = {1};
    for (int e = pairs - n / 2 + 1; e <= pairs; ++e) config.edges.push_back(e);
    for (const Estimate& est : run_experiment(config)) {
      CHECK(est.successes == 0);
      CHECK(est.moe95 == 0.0);
    }
  }
}

TEST_CASE("estimates agree with exact probabilities through order nine") {
  for (int n = 2; n <= 9; ++n) {
    ExperimentConfig config;
    config.n = n;
    config.trials = 100000;
    config.seed = 2024;
    config.workers = default_workers();
    const auto table = exact_table(n);
    for (const Estimate& est : run_experiment(config)) {
      const double exact = static_cast<double>(table[est.e].probability());
      INFO("n = " << n << ", e = " << est.e << ": " << est.p_hat << " vs " << exact);
      if (exact == 0.0 || exact == 1.0) {
        CHECK(est.p_hat == exact);
      } else {
        CHECK(std::abs(est.p_hat - exact) <= 4 * est.moe95);
      }
    }
  }
}

TEST_CASE("chi-square helpers") {
  CHECK(chi_square_sf(0.0, 3) == doctest::Approx(1.0));
  CHECK(chi_square_sf(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(chi_square_sf(23.209251158954356, 10) == doctest::Approx(0.01).epsilon(1e-9));

  const ChiSquare flat = chi_square_uniform({100, 100, 100, 100}, 4);
  CHECK(flat.statistic == doctest::Approx(0.0));
  CHECK(flat.dof == 3);
  CHECK(flat.pass());
  // Empty cells count as zeros: observed {50, 50} over 4 cells.
  const ChiSquare gaps = chi_square_uniform({50, 50}, 4);
  CHECK(gaps.statistic == doctest::Approx(100.0));
  CHECK_FALSE(gaps.pass());
  CHECK_THROWS(chi_square_uniform({1, 2, 3}, 2));

  const ChiSquare same = chi_square_two_sample({10, 20, 30}, {20, 40, 60});
  CHECK(same.statistic == doctest::Approx(0.0));
  CHECK(same.dof == 2);
  const ChiSquare skew = chi_square_two_sample({90, 10}, {10, 90});
  CHECK(skew.statistic == doctest::Approx(128.0));
  CHECK_FALSE(skew.pass());
  CHECK_THROWS(chi_square_two_sample({1}, {1, 2}));
}

TEST_CASE("worker default") {
  CHECK(default_workers() >= 1);
}
