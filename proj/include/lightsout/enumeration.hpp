#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lightsout/canonical.hpp"
#include "lightsout/graph.hpp"

namespace lightsout {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class UnsupportedRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr int kMaxEnumerationOrder = 9;
inline constexpr int kMaxEnumerationEdges = 12;

using GraphVisitor = std::function<void(const Graph&)>;

// One representative per isomorphism class of graphs on n vertices.
// Graphs with more than half of the pairs are produced as complements of the
// sparse side, so the visiting order is not sorted by edge count.
void enumerate_by_vertices(int n, const GraphVisitor& visit);
std::vector<Graph> enumerate_by_vertices(int n);

// Connected graphs with exactly k >= 1 edges, one per class. Cached after the
// first call; safe to call from several threads.
const std::vector<Graph>& connected_graphs_with_edges(int k);

// Graphs with exactly k edges and no isolated vertex, one per class, keeping
// only those with at most max_n vertices (max_n < 0 means no limit).
void enumerate_by_edges(int k, int max_n, const GraphVisitor& visit);
std::vector<Graph> enumerate_by_edges(int k, int max_n = -1);

// g padded with isolated vertices up to n.
Graph pad_to_order(const Graph& g, int n);

struct ExactCount {
  int n = 0;
  int e = 0;
  BigInt classes;    // G_{n,e}
  BigInt solvable;   // classes whose game is universally solvable
  Rational probability() const;
};

// Supported when n <= 9, or when min(e, N-e) <= 12.
bool exact_supported(int n, int e);
ExactCount exact_count(int n, int e);
BigInt count_graphs(int n, int e);
Rational exact_probability(int n, int e);

// Rows e = 0..N for n <= 9 from one full enumeration.
std::vector<ExactCount> exact_table(int n);

// Decimal rendering with `digits` places after the point, rounded half up.
std::string to_decimal(const Rational& q, int digits = 6);

}  // namespace lightsout
