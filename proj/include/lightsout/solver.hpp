#pragma once

#include <optional>

#include "lightsout/gf2.hpp"
#include "lightsout/graph.hpp"

namespace lightsout {

// Every configuration can be switched off. The 0-vertex graph counts as
// solvable.
bool is_universally_solvable(const Graph& g);

// Rank of the neighborhood matrix.
int neighborhood_rank(const Graph& g);

// Presses that switch off `lights` (canonical solution), if any exist.
std::optional<VertexSet> solve_configuration(const Graph& g, const VertexSet& lights);

// Lights left on after pressing every vertex of `presses`, starting from
// `lights`. Press order does not matter.
VertexSet apply_presses(const Graph& g, const VertexSet& lights, const VertexSet& presses);

// A set S whose closed neighborhood count is odd at every vertex.
std::optional<VertexSet> odd_dominating_set(const Graph& g);

// Whether some odd dominating set has even cardinality. Searches the whole
// affine solution set, not only the canonical solution.
bool has_even_odd_dominating_set(const Graph& g);

// Solvability of join(g1, g2) from properties of the two parts.
bool join_solvable(const Graph& g1, const Graph& g2);

}  // namespace lightsout
