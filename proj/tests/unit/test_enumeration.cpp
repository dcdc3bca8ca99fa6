#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <unordered_set>
#include <vector>

#include "lightsout/canonical.hpp"
#include "lightsout/enumeration.hpp"
#include "lightsout/graph.hpp"
#include "lightsout/solver.hpp"
#include "oracles.hpp"

using namespace lightsout;
using namespace lightsout::testing;

namespace {

void check_distinct(const std::vector<Graph>& graphs) {
  std::unordered_set<CanonicalForm, CanonicalFormHash> forms;
  for (const Graph& g : graphs) forms.insert(canonical_form(g));
  CHECK(forms.size() == graphs.size());
}

}  // namespace

TEST_CASE("class counts by order") {
  const long long expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) {
    const auto graphs = enumerate_by_vertices(n);
    CHECK(static_cast<long long>(graphs.size()) == expected[n]);
    if (n <= 7) check_distinct(graphs);
  }
}

TEST_CASE("order nine") {
  long long total = 0;
  enumerate_by_vertices(9, [&](const Graph& g) {
    CHECK(g.order() == 9);
    ++total;
  });
  CHECK(total == 274668);
}

TEST_CASE("small orders match labeled brute force") {
  for (int n = 1; n <= 6; ++n) {
    std::map<int, std::set<std::string>> got;
    for (const Graph& g : enumerate_by_vertices(n)) got[g.edge_count()].insert(brute_canonical(g));
    CHECK(got == brute_classes(n));
  }
  std::size_t three = 0, four = 0;
  for (const auto& [e, s] : brute_classes(3)) three += s.size();
  for (const auto& [e, s] : brute_classes(4)) four += s.size();
  CHECK(three == 4);
  CHECK(four == 11);
}

TEST_CASE("connected graphs by edge count") {
  const std::size_t expected[] = {0, 1, 1, 3, 5, 12, 30, 79, 227, 710, 2322, 8071, 29503};
  for (int k = 1; k <= 10; ++k) {
    const auto& graphs = connected_graphs_with_edges(k);
    CHECK(graphs.size() == expected[k]);
    for (const Graph& g : graphs) {
      CHECK(is_connected(g));
      CHECK(g.edge_count() == k);
    }
    if (k <= 8) check_distinct(graphs);
  }
  CHECK(connected_graphs_with_edges(12).size() == expected[12]);
}

TEST_CASE("graphs without isolated vertices by edge count") {
  const std::size_t expected[] = {1, 1, 2, 5, 11, 26, 68, 177, 497, 1476, 4613, 15216, 52944};
  for (int k = 1; k <= 12; ++k) {
    const auto graphs = enumerate_by_edges(k);
    CHECK(graphs.size() == expected[k]);
    if (k <= 7) {
      check_distinct(graphs);
      for (const Graph& g : graphs) {
        CHECK(g.edge_count() == k);
        CHECK(structural_queries(g).isolated_vertices.empty());
      }
    }
  }
  const auto two = enumerate_by_edges(2);
  std::set<CanonicalForm> forms{canonical_form(two[0]), canonical_form(two[1])};
  CHECK(forms.count(canonical_form(matching_graph(2))) == 1);
  CHECK(forms.count(canonical_form(path_graph(3))) == 1);
  CHECK(enumerate_by_edges(1)[0] == complete_graph(2));
}

TEST_CASE("vertex cap truncates edge enumeration") {
  for (int k = 1; k <= 8; ++k) {
    for (int cap = 2; cap <= 2 * k; ++cap) {
      std::size_t direct = 0;
      for (const Graph& g : enumerate_by_edges(k)) direct += g.order() <= cap;
      CHECK(enumerate_by_edges(k, cap).size() == direct);
    }
  }
}

TEST_CASE("edge and vertex enumerations agree after padding") {
  for (int n = 2; n <= 8; ++n) {
    const int pairs = pair_count(n);
    std::vector<long long> by_vertices(pairs + 1, 0);
    for (const Graph& g : enumerate_by_vertices(n)) ++by_vertices[g.edge_count()];
    for (int e = 0; e <= std::min(pairs, 12); ++e) {
      long long by_edges = e == 0 ? 1 : static_cast<long long>(enumerate_by_edges(e, n).size());
      CHECK(by_edges == by_vertices[e]);
      CHECK(count_graphs(n, e) == by_vertices[e]);
    }
  }
  CHECK(pad_to_order(path_graph(3), 6).order() == 6);
  CHECK(pad_to_order(path_graph(3), 6).edge_count() == 2);
}

TEST_CASE("count identities") {
  for (int n = 1; n <= 20; ++n) {
    const int pairs = pair_count(n);
    CHECK(count_graphs(n, 0) == 1);
    CHECK(count_graphs(n, pairs) == 1);
    for (int e = 0; e <= pairs; ++e)
      if (exact_supported(n, e)) CHECK(count_graphs(n, e) == count_graphs(n, pairs - e));
  }
  CHECK(count_graphs(8, 2) == 2);
  CHECK_THROWS_AS(count_graphs(14, 40), UnsupportedRange);
  CHECK_FALSE(exact_supported(14, 40));
  CHECK(exact_supported(64, 12));
}

TEST_CASE("exact probabilities") {
  CHECK(exact_probability(8, 2) == Rational(1, 2));
  for (int n = 2; n <= 16; ++n) {
    const int pairs = pair_count(n);
    CHECK(exact_probability(n, 0) == 1);
    CHECK(exact_probability(n, pairs) == 0);
    for (int e = pairs - n / 2 + 1; e <= pairs; ++e) CHECK(exact_probability(n, e) == 0);
    if (n >= 3) CHECK(exact_probability(n, 1) == 0);
  }
}

TEST_CASE("exact table agrees with a direct tally") {
  for (int n = 1; n <= 7; ++n) {
    const auto table = exact_table(n);
    REQUIRE(static_cast<int>(table.size()) == pair_count(n) + 1);
    std::vector<long long> classes(table.size(), 0), solvable(table.size(), 0);
    for (const Graph& g : enumerate_by_vertices(n)) {
      ++classes[g.edge_count()];
      solvable[g.edge_count()] += is_universally_solvable(g);
    }
    for (const ExactCount& row : table) {
      CHECK(row.classes == classes[row.e]);
      CHECK(row.solvable == solvable[row.e]);
      CHECK(row.probability() == Rational(solvable[row.e], classes[row.e]));
    }
  }
}

TEST_CASE("edge-side tallies match the full table at n = 9") {
  const auto table = exact_table(9);
  const int pairs = pair_count(9);
  long long total = 0;
  for (const ExactCount& row : table) total += static_cast<long long>(row.classes);
  CHECK(total == 274668);
  for (int k = 1; k <= 12; ++k) {
    long long classes = 0, sparse_solvable = 0, dense_solvable = 0;
    enumerate_by_edges(k, 9, [&](const Graph& g) {
      const Graph padded = pad_to_order(g, 9);
      ++classes;
      sparse_solvable += is_universally_solvable(padded);
      dense_solvable += is_universally_solvable(complement(padded));
    });
    CHECK(table[k].classes == classes);
    CHECK(table[k].solvable == sparse_solvable);
    CHECK(table[pairs - k].classes == classes);
    CHECK(table[pairs - k].solvable == dense_solvable);
  }
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(Rational(1, 2)) == "0.500000");
  CHECK(to_decimal(Rational(1, 3)) == "0.333333");
  CHECK(to_decimal(Rational(2, 3)) == "0.666667");
  CHECK(to_decimal(Rational(1)) == "1.000000");
  CHECK(to_decimal(Rational(0)) == "0.000000");
  CHECK(to_decimal(Rational(1, 26), 5) == "0.03846");
  CHECK(to_decimal(Rational(1, 8), 2) == "0.13");
}

TEST_CASE("five-edge graphs and the top of the order-ten table") {
  CHECK(enumerate_by_edges(5).size() == 26);
  CHECK(count_graphs(10, 40) == 26);
  CHECK(exact_probability(10, 40) == Rational(1, 26));
}
