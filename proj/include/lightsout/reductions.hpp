#pragma once

#include <optional>

#include "lightsout/graph.hpp"

namespace lightsout {

// Structural shortcuts for deciding solvability of complement(g) without
// elimination. The "forces" predicates say complement(g) is NOT universally
// solvable whenever they hold; the "reduce" functions return a smaller graph
// whose complement has the same verdict, or nullopt when they do not apply.
namespace reductions {

// Two adjacent vertices with the same neighbors otherwise: g itself is
// unsolvable (identical matrix rows).
bool has_adjacent_twins(const Graph& g);

// Isolated vertex in a graph of even order.
bool forces_isolated_vertex_even_order(const Graph& g);

// Some vertex is adjacent to two or more degree-1 vertices.
bool forces_vertex_with_two_leaves(const Graph& g);

// Two or more isolated vertices.
bool forces_two_isolated_vertices(const Graph& g);

// A vertex of degree d >= 3 while at most d-1 vertices have degree >= 2.
bool forces_high_degree_few_branches(const Graph& g);

// Two non-adjacent degree-2 vertices with the same two neighbors (opposite
// corners of a 4-cycle).
bool forces_square_with_degree_two_corners(const Graph& g);

bool any_forcing_rule(const Graph& g);

// Odd order with an isolated vertex: drop that vertex.
std::optional<Graph> reduce_isolated_vertex_odd_order(const Graph& g);

// An isolated edge (K2 component): drop both endpoints.
std::optional<Graph> reduce_isolated_edge(const Graph& g);

}  // namespace reductions
}  // namespace lightsout
