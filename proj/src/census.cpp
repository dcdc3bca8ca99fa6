#include "lightsout/census.hpp"

#include <string>

#include "lightsout/enumeration.hpp"
#include "lightsout/solver.hpp"

namespace lightsout {

namespace {

struct Component {
  const Graph* graph;
  int excess;
};

std::vector<Component> core_components(int d) {
  std::vector<Component> out;
  for (int j = 2; j <= d + 1; ++j) {
    for (const Graph& c : connected_graphs_with_edges(j)) {
      const int x = 2 * j - c.order();
      if (x <= d) out.push_back({&c, x});
    }
  }
  return out;
}

void choose(const std::vector<Component>& comps, int remaining, std::size_t max_idx, const Graph& acc,
            std::vector<Graph>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t k = max_idx + 1; k-- > 0;) {
    if (comps[k].excess > remaining) continue;
    choose(comps, remaining - comps[k].excess, k, disjoint_union(acc, *comps[k].graph), out);
  }
}

}  // namespace

Graph reduced_core(const Graph& g) {
  Row drop = 0;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d == 0) drop |= bit(v);
    if (d == 1) {
      const int u = std::countr_zero(g.row(v));
      if (g.degree(u) == 1) drop |= bit(v) | bit(u);
    }
  }
  return delete_vertices(g, VertexSet(g.order(), drop));
}

std::vector<Graph> cores_with_excess(int d) {
  if (d < 0) return {};
  if (d > kMaxCensusExcess) {
    throw UnsupportedRange("core census supports excess degree <= " + std::to_string(kMaxCensusExcess));
  }
  std::vector<Graph> out;
  const auto comps = core_components(d);
  if (d == 0) return {Graph(0)};
  choose(comps, d, comps.size() - 1, Graph(0), out);
  return out;
}

CensusResult compute_E(int n, int d) {
  if (n < 0 || n > kMaxVertices) throw CapacityError("census order must lie in 0..64, got " + std::to_string(n));
  CensusResult result;
  result.n = n;
  result.d = d;
  // Two isolated vertices in g are two dominating vertices of the complement,
  // which then has two equal matrix rows. So g = core + t*K2 + i*K1 with
  // i in {0, 1} fixed by parity.
  for (const Graph& core : cores_with_excess(d)) {
    if (core.order() > n) continue;
    const int rest = n - core.order();
    Graph g = disjoint_union(core, matching_graph(rest / 2));
    g = pad_to_order(g, n);
    if (is_universally_solvable(complement(g))) result.graphs.push_back(std::move(g));
  }
  result.count = static_cast<int>(result.graphs.size());
  return result;
}

CensusResult compute_U(int n, int m) {
  if (m < 0 || m > kMaxCensusM) throw UnsupportedRange("U census supports 0 <= m <= " + std::to_string(kMaxCensusM));
  const int sparse = n / 2 + m;
  if (n < 2 * m || n < 1 || sparse > pair_count(n)) {
    throw UnsupportedRange("U census needs n >= 2m with floor(n/2)+m <= N; got n=" + std::to_string(n) +
                           ", m=" + std::to_string(m));
  }
  CensusResult result;
  result.n = n;
  result.d = m;
  // Complements have `sparse` edges and at most one isolated vertex, so
  // their excess degree is 2*sparse - n, plus one when a vertex is isolated.
  for (int d = 2 * sparse - n; d <= 2 * sparse - n + 1; ++d) {
    for (const Graph& g : compute_E(n, d).graphs) result.graphs.push_back(complement(g));
  }
  result.count = static_cast<int>(result.graphs.size());
  return result;
}

}  // namespace lightsout
