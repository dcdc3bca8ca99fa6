#include "lightsout/graph.hpp"

#include <string>

namespace lightsout {

void check_capacity(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " outside supported range [0, " +
                        std::to_string(kMaxVertices) + "]");
  }
}

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(n));
  }
}

}  // namespace

VertexSet::VertexSet(int n, Row bits) : n_(n), bits_(bits) {
  check_capacity(n);
  if ((bits & ~low_mask(n)) != 0) {
    throw std::out_of_range("vertex set has members outside 0.." + std::to_string(n - 1));
  }
}

VertexSet VertexSet::of(int n, std::span<const int> vertices) {
  VertexSet s(n);
  for (int v : vertices) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  check_vertex(n_, v);
  bits_ |= bit(v);
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for (Row b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int n) : n_(n) { check_capacity(n); }

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_rows(int n, std::span<const Row> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count does not match order");
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    Row r = rows[v];
    if ((r & ~low_mask(n)) != 0 || (r & bit(v)) != 0) {
      throw std::invalid_argument("adjacency row " + std::to_string(v) + " has invalid bits");
    }
    g.adj_[v] = r;
    degree_sum += std::popcount(r);
  }
  for (int u = 0; u < n; ++u) {
    for (Row b = g.adj_[u]; b != 0; b &= b - 1) {
      if (!g.has_edge(std::countr_zero(b), u)) throw std::invalid_argument("adjacency is not symmetric");
    }
  }
  g.e_ = degree_sum / 2;
  return g;
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++e_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (!has_edge(u, v)) return;
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
  --e_;
}

void Graph::toggle_edge(int u, int v) {
  if (has_edge(u, v)) {
    remove_edge(u, v);
  } else {
    add_edge(u, v);
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(e_);
  for (int u = 0; u < n_; ++u) {
    for (Row b = adj_[u] & ~low_mask(u + 1); b != 0; b &= b - 1) out.emplace_back(u, std::countr_zero(b));
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || e_ != other.e_) return false;
  for (int v = 0; v < n_; ++v) {
    if (adj_[v] != other.adj_[v]) return false;
  }
  return true;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph matching_graph(int pairs) {
  Graph g(2 * pairs);
  for (int k = 0; k < pairs; ++k) g.add_edge(2 * k, 2 * k + 1);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::array<Row, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) rows[v] = ~g.row(v) & low_mask(n) & ~bit(v);
  return Graph::from_rows(n, {rows.data(), static_cast<std::size_t>(n)});
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  if (n > kMaxVertices) throw CapacityError("disjoint union would have " + std::to_string(n) + " vertices");
  Graph g(n);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  if (n > kMaxVertices) throw CapacityError("join would have " + std::to_string(n) + " vertices");
  Graph g = disjoint_union(g1, g2);
  for (int u = 0; u < n1; ++u) {
    for (int v = n1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph delete_vertices(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  if (removed.universe() != n) throw std::invalid_argument("vertex set universe does not match graph order");
  std::vector<int> new_label(n, -1);
  int kept = 0;
  for (int v = 0; v < n; ++v) {
    if (!removed.contains(v)) new_label[v] = kept++;
  }
  Graph out(kept);
  for (auto [u, v] : g.edges()) {
    if (new_label[u] >= 0 && new_label[v] >= 0) out.add_edge(new_label[u], new_label[v]);
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation length does not match order");
  Row seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (seen & bit(p)) != 0) throw std::invalid_argument("not a permutation");
    seen |= bit(p);
  }
  std::array<Row, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) {
    Row r = 0;
    for (Row b = g.row(v); b != 0; b &= b - 1) r |= bit(perm[std::countr_zero(b)]);
    rows[perm[v]] = r;
  }
  return Graph::from_rows(n, {rows.data(), static_cast<std::size_t>(n)});
}

int excess_degree(const Graph& g) {
  int isolated = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.row(v) == 0) ++isolated;
  }
  return isolated - g.order() + 2 * g.edge_count();
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> out;
  Row unseen = low_mask(n);
  while (unseen != 0) {
    Row comp = bit(std::countr_zero(unseen));
    Row frontier = comp;
    while (frontier != 0) {
      Row next = 0;
      for (Row b = frontier; b != 0; b &= b - 1) next |= g.row(std::countr_zero(b));
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    out.emplace_back(n, comp);
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Structure structural_queries(const Graph& g) {
  const int n = g.order();
  Structure s;
  s.isolated_vertices = VertexSet(n);
  s.dominating_vertices = VertexSet(n);
  s.degrees.resize(n);
  for (int v = 0; v < n; ++v) {
    s.degrees[v] = g.degree(v);
    if (s.degrees[v] == 0) s.isolated_vertices.insert(v);
    if (s.degrees[v] == n - 1) s.dominating_vertices.insert(v);
  }
  for (auto [u, v] : g.edges()) {
    if (s.degrees[u] == 1 && s.degrees[v] == 1) s.isolated_edges.emplace_back(u, v);
  }
  s.components = connected_components(g);
  return s;
}

}  // namespace lightsout
