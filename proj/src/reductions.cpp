#include "lightsout/reductions.hpp"

namespace lightsout::reductions {

namespace {

Row vertices_of_degree(const Graph& g, int lo, int hi) {
  Row out = 0;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d >= lo && d <= hi) out |= bit(v);
  }
  return out;
}

}  // namespace

bool has_adjacent_twins(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if ((g.row(u) | bit(u)) == (g.row(v) | bit(v))) return true;
  }
  return false;
}

bool forces_isolated_vertex_even_order(const Graph& g) {
  return g.order() % 2 == 0 && vertices_of_degree(g, 0, 0) != 0;
}

bool forces_vertex_with_two_leaves(const Graph& g) {
  const Row leaves = vertices_of_degree(g, 1, 1);
  for (int v = 0; v < g.order(); ++v) {
    if (std::popcount(g.row(v) & leaves) >= 2) return true;
  }
  return false;
}

bool forces_two_isolated_vertices(const Graph& g) { return std::popcount(vertices_of_degree(g, 0, 0)) >= 2; }

bool forces_high_degree_few_branches(const Graph& g) {
  const int branch_vertices = std::popcount(vertices_of_degree(g, 2, g.order()));
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d >= 3 && branch_vertices <= d - 1) return true;
  }
  return false;
}

bool forces_square_with_degree_two_corners(const Graph& g) {
  const Row deg2 = vertices_of_degree(g, 2, 2);
  for (Row a = deg2; a != 0; a &= a - 1) {
    const int u = std::countr_zero(a);
    for (Row b = a & (a - 1); b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (!g.has_edge(u, v) && g.row(u) == g.row(v)) return true;
    }
  }
  return false;
}

bool any_forcing_rule(const Graph& g) {
  return forces_isolated_vertex_even_order(g) || forces_vertex_with_two_leaves(g) ||
         forces_two_isolated_vertices(g) || forces_high_degree_few_branches(g) ||
         forces_square_with_degree_two_corners(g);
}

std::optional<Graph> reduce_isolated_vertex_odd_order(const Graph& g) {
  if (g.order() % 2 == 0) return std::nullopt;
  const Row isolated = vertices_of_degree(g, 0, 0);
  if (isolated == 0) return std::nullopt;
  return delete_vertices(g, VertexSet(g.order(), isolated & -isolated));
}

std::optional<Graph> reduce_isolated_edge(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) == 1 && g.degree(v) == 1) return delete_vertices(g, VertexSet(g.order(), bit(u) | bit(v)));
  }
  return std::nullopt;
}

}  // namespace lightsout::reductions
