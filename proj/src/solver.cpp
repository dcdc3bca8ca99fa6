#include "lightsout/solver.hpp"

#include <array>
#include <string>

namespace lightsout {

namespace {

Gf2Vector as_vector(const VertexSet& s) { return {s.universe(), s.bits()}; }

}  // namespace

bool is_universally_solvable(const Graph& g) {
  // Hot path for the Monte Carlo loop: eliminate on a stack copy.
  const int n = g.order();
  std::array<Row, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) rows[v] = g.row(v) | bit(v);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if ((rows[r] >> col) & 1U) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(rows[pivot], rows[col]);
    for (int r = col + 1; r < n; ++r) {
      if ((rows[r] >> col) & 1U) rows[r] ^= rows[col];
    }
  }
  return true;
}

int neighborhood_rank(const Graph& g) { return rank(neighborhood_matrix(g)); }

std::optional<VertexSet> solve_configuration(const Graph& g, const VertexSet& lights) {
  if (lights.universe() != g.order()) throw std::invalid_argument("configuration universe does not match graph order");
  auto x = solve(neighborhood_matrix(g), as_vector(lights));
  if (!x) return std::nullopt;
  return VertexSet(g.order(), x->bits);
}

VertexSet apply_presses(const Graph& g, const VertexSet& lights, const VertexSet& presses) {
  if (lights.universe() != g.order() || presses.universe() != g.order()) {
    throw std::invalid_argument("vertex set universe does not match graph order");
  }
  Row state = lights.bits();
  for (int v : presses.to_vector()) state ^= g.row(v) | bit(v);
  return VertexSet(g.order(), state);
}

std::optional<VertexSet> odd_dominating_set(const Graph& g) {
  return solve_configuration(g, VertexSet::all(g.order()));
}

bool has_even_odd_dominating_set(const Graph& g) {
  const int n = g.order();
  auto sol = solve_affine(neighborhood_matrix(g), {n, low_mask(n)});
  if (!sol) return false;
  if (std::popcount(sol->particular.bits) % 2 == 0) return true;
  // Parity is linear, so an odd-weight kernel vector exists iff one basis
  // vector has odd weight.
  for (const auto& k : sol->kernel_basis) {
    if (std::popcount(k.bits) % 2 == 1) return true;
  }
  return false;
}

bool join_solvable(const Graph& g1, const Graph& g2) {
  if (g1.order() + g2.order() > kMaxVertices) {
    throw CapacityError("join of orders " + std::to_string(g1.order()) + " and " + std::to_string(g2.order()) +
                        " exceeds " + std::to_string(kMaxVertices));
  }
  return is_universally_solvable(g1) && is_universally_solvable(g2) &&
         (has_even_odd_dominating_set(g1) || has_even_odd_dominating_set(g2));
}

}  // namespace lightsout
