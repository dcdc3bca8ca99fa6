#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lightsout {

// One adjacency row per vertex. Widening Row (and kMaxVertices) is the single
// place to touch when graphs beyond 64 vertices are needed.
using Row = std::uint64_t;
inline constexpr int kMaxVertices = 64;

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr Row bit(int v) { return Row{1} << v; }

inline constexpr Row low_mask(int n) {
  return n >= kMaxVertices ? ~Row{0} : (Row{1} << n) - 1;
}

// Number of unordered vertex pairs, N = n(n-1)/2.
inline constexpr int pair_count(int n) { return n * (n - 1) / 2; }

void check_capacity(int n);

// A subset of {0, ..., n-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n, Row bits = 0);

  static VertexSet all(int n) { return VertexSet(n, low_mask(n)); }
  static VertexSet of(int n, std::span<const int> vertices);

  int universe() const { return n_; }
  Row bits() const { return bits_; }
  bool contains(int v) const { return (bits_ >> v) & 1U; }
  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  void insert(int v);
  void erase(int v) { bits_ &= ~bit(v); }

  std::vector<int> to_vector() const;

  bool operator==(const VertexSet&) const = default;

 private:
  int n_ = 0;
  Row bits_ = 0;
};

// Simple undirected graph on vertices 0..n-1, stored as bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_rows(int n, std::span<const Row> rows);

  int order() const { return n_; }
  int edge_count() const { return e_; }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  Row row(int v) const { return adj_[v]; }
  std::span<const Row> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;

  // Labeled equality (same vertex numbering, same edges).
  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  int e_ = 0;
  std::array<Row, kMaxVertices> adj_{};
};

// Standard families used throughout the tests and the census code.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);   // n vertices, n-1 edges
Graph cycle_graph(int n);
Graph matching_graph(int pairs);  // pairs disjoint copies of K2

Graph complement(const Graph& g);
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Induced subgraph on the vertices not in `removed`; survivors keep their
// relative order.
Graph delete_vertices(const Graph& g, const VertexSet& removed);

// perm[v] is the new label of vertex v.
Graph relabel(const Graph& g, std::span<const int> perm);

// i - n + sum of degrees, where i counts isolated vertices.
int excess_degree(const Graph& g);

struct Structure {
  std::vector<int> degrees;
  VertexSet isolated_vertices;
  std::vector<std::pair<int, int>> isolated_edges;
  VertexSet dominating_vertices;
  std::vector<VertexSet> components;  // ordered by smallest member
};

Structure structural_queries(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace lightsout
