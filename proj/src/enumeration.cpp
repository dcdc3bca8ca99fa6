#include "lightsout/enumeration.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_set>

#include "lightsout/solver.hpp"

namespace lightsout {

namespace {

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

// Isomorphism-invariant edge key. The canonical deletion edge is always
// taken among edges with the largest key, which lets most augmentations be
// rejected before any canonical labeling is computed.
struct EdgeKey {
  int valid = 0;
  int hi = 0;
  int lo = 0;
  int common = 0;
  auto operator<=>(const EdgeKey&) const = default;
};

EdgeKey edge_key(const Graph& g, int u, int v, int valid) {
  const int du = g.degree(u);
  const int dv = g.degree(v);
  return {valid, std::max(du, dv), std::min(du, dv), std::popcount(g.row(u) & g.row(v))};
}

// Among edges with the maximal key, the one whose canonical labels form the
// largest pair. Keys must be precomputed per edge.
std::pair<int, int> deletion_edge(const std::vector<std::pair<int, int>>& edges, const std::vector<EdgeKey>& keys,
                                  const EdgeKey& best, const std::vector<int>& perm) {
  std::pair<int, int> chosen{-1, -1};
  std::pair<int, int> chosen_label{-1, -1};
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (keys[k] != best) continue;
    const auto [x, y] = edges[k];
    const std::pair<int, int> label{std::max(perm[x], perm[y]), std::min(perm[x], perm[y])};
    if (label > chosen_label) {
      chosen_label = label;
      chosen = edges[k];
    }
  }
  return chosen;
}

// ---- graphs on a fixed vertex set -------------------------------------------

class VertexGrower {
 public:
  VertexGrower(int n, const GraphVisitor& visit) : n_(n), pairs_(pair_count(n)), visit_(visit) {}

  void run() {
    const Graph root = empty_graph(n_);
    grow(root, canonical_form(root));
  }

 private:
  void emit(const Graph& g) {
    visit_(g);
    if (2 * g.edge_count() < pairs_) visit_(complement(g));
  }

  void grow(const Graph& g, const CanonicalForm& form) {
    emit(g);
    if (2 * (g.edge_count() + 1) > pairs_) return;

    FormSet seen;
    std::vector<std::pair<Graph, CanonicalForm>> kids;
    std::vector<EdgeKey> keys;
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (g.has_edge(u, v)) continue;
        Graph c = g;
        c.add_edge(u, v);
        const auto edges = c.edges();
        keys.clear();
        EdgeKey best;
        for (auto [x, y] : edges) {
          keys.push_back(edge_key(c, x, y, 1));
          best = std::max(best, keys.back());
        }
        if (edge_key(c, u, v, 1) != best) continue;
        const auto perm = canonical_labeling(c);
        const auto [x, y] = deletion_edge(edges, keys, best, perm);
        if (!(x == u && y == v)) {
          Graph parent = c;
          parent.remove_edge(x, y);
          if (canonical_form(parent) != form) continue;
        }
        CanonicalForm cf = pack_upper_triangle(relabel(c, perm));
        if (!seen.insert(cf).second) continue;
        kids.emplace_back(std::move(c), std::move(cf));
      }
    }
    for (const auto& [c, cf] : kids) grow(c, cf);
  }

  int n_;
  int pairs_;
  const GraphVisitor& visit_;
};

// ---- connected graphs by edge count -----------------------------------------

struct Level {
  std::vector<Graph> graphs;
  std::vector<CanonicalForm> forms;
};

bool is_pendant(const Graph& g, int x, int y) { return g.degree(x) == 1 || g.degree(y) == 1; }

// Removing xy from a connected graph: either xy is not a bridge, or it is a
// pendant edge and the leaf goes with it. Other bridges are not deletable.
std::optional<Graph> connected_deletion(const Graph& c, int x, int y) {
  if (is_pendant(c, x, y)) {
    const int leaf = c.degree(x) == 1 ? x : y;
    return delete_vertices(c, VertexSet(c.order(), bit(leaf)));
  }
  Graph d = c;
  d.remove_edge(x, y);
  if (!is_connected(d)) return std::nullopt;
  return d;
}

class ConnectedCatalog {
 public:
  const std::vector<Graph>& level(int k) {
    if (k < 1 || k > kMaxEnumerationEdges) {
      throw UnsupportedRange("connected catalog supports 1.." + std::to_string(kMaxEnumerationEdges) +
                             " edges, got " + std::to_string(k));
    }
    std::lock_guard lock(mutex_);
    if (levels_.empty()) {
      Graph k2 = path_graph(2);
      levels_.push_back(Level{{k2}, {canonical_form(k2)}});
    }
    while (static_cast<int>(levels_.size()) < k) levels_.push_back(next(levels_.back()));
    return levels_[k - 1].graphs;
  }

 private:
  static void consider(const Graph& c, int u, int v, const CanonicalForm& parent_form, FormSet& seen, Level& out) {
    const auto edges = c.edges();
    std::vector<EdgeKey> keys;
    keys.reserve(edges.size());
    EdgeKey best;
    EdgeKey mine;
    for (auto [x, y] : edges) {
      const bool valid = is_pendant(c, x, y) || [&] {
        Graph d = c;
        d.remove_edge(x, y);
        return is_connected(d);
      }();
      keys.push_back(edge_key(c, x, y, valid ? 1 : 0));
      best = std::max(best, keys.back());
      if ((x == u && y == v) || (x == v && y == u)) mine = keys.back();
    }
    if (mine != best) return;
    const auto perm = canonical_labeling(c);
    auto [x, y] = deletion_edge(edges, keys, best, perm);
    if (!((x == u && y == v) || (x == v && y == u))) {
      const auto parent = connected_deletion(c, x, y);
      if (!parent || canonical_form(*parent) != parent_form) return;
    }
    CanonicalForm cf = pack_upper_triangle(relabel(c, perm));
    if (!seen.insert(cf).second) return;
    out.graphs.push_back(c);
    out.forms.push_back(std::move(cf));
  }

  static Level next(const Level& prev) {
    Level out;
    for (std::size_t p = 0; p < prev.graphs.size(); ++p) {
      const Graph& g = prev.graphs[p];
      const int n = g.order();
      FormSet seen;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph c = g;
          c.add_edge(u, v);
          consider(c, u, v, prev.forms[p], seen, out);
        }
      }
      if (n + 1 > kMaxCanonicalOrder) continue;
      for (int u = 0; u < n; ++u) {
        Graph c(n + 1);
        for (auto [x, y] : g.edges()) c.add_edge(x, y);
        c.add_edge(u, n);
        consider(c, u, n, prev.forms[p], seen, out);
      }
    }
    return out;
  }

  std::mutex mutex_;
  std::deque<Level> levels_;  // deque: references stay valid as levels grow
};

ConnectedCatalog& catalog() {
  static ConnectedCatalog instance;
  return instance;
}

// Fewest vertices that can carry k edges.
int min_vertices_for(int k) {
  if (k == 0) return 0;
  int s = 2;
  while (pair_count(s) < k) ++s;
  return s;
}

class MultisetBuilder {
 public:
  MultisetBuilder(int k, int max_n, const GraphVisitor& visit) : k_(k), max_n_(max_n), visit_(visit) {
    for (int j = 1; j <= k; ++j) levels_.push_back(&connected_graphs_with_edges(j));
  }

  void run() { place(k_, k_, static_cast<int>(levels_[k_ - 1]->size()) - 1, Graph(0)); }

 private:
  // Components are placed in non-increasing (edges, index) order so each
  // multiset is produced once.
  void place(int remaining, int max_j, int max_idx, const Graph& acc) {
    if (remaining == 0) {
      visit_(acc);
      return;
    }
    for (int j = std::min(remaining, max_j); j >= 1; --j) {
      const auto& comps = *levels_[j - 1];
      const int top = j == max_j ? max_idx : static_cast<int>(comps.size()) - 1;
      for (int idx = top; idx >= 0; --idx) {
        const Graph& comp = comps[idx];
        const int used = acc.order() + comp.order();
        if (max_n_ >= 0 && used + min_vertices_for(remaining - j) > max_n_) continue;
        if (used > kMaxVertices) continue;
        place(remaining - j, j, idx, disjoint_union(acc, comp));
      }
    }
  }

  int k_;
  int max_n_;
  const GraphVisitor& visit_;
  std::vector<const std::vector<Graph>*> levels_;
};

// ---- exact tables -------------------------------------------------------------

std::vector<ExactCount> build_table(int n) {
  const int pairs = pair_count(n);
  std::vector<ExactCount> rows(pairs + 1);
  for (int e = 0; e <= pairs; ++e) {
    rows[e].n = n;
    rows[e].e = e;
  }
  std::vector<long long> classes(pairs + 1, 0);
  std::vector<long long> solvable(pairs + 1, 0);
  enumerate_by_vertices(n, [&](const Graph& g) {
    ++classes[g.edge_count()];
    if (is_universally_solvable(g)) ++solvable[g.edge_count()];
  });
  for (int e = 0; e <= pairs; ++e) {
    rows[e].classes = classes[e];
    rows[e].solvable = solvable[e];
  }
  return rows;
}

const std::vector<ExactCount>& cached_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<ExactCount>> tables;
  std::lock_guard lock(mutex);
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, build_table(n)).first;
  return it->second;
}

void check_instance(int n, int e) {
  if (n < 0 || n > kMaxVertices) throw CapacityError("order " + std::to_string(n) + " outside 0..64");
  if (e < 0 || e > pair_count(n)) {
    throw UnsupportedRange("edge count " + std::to_string(e) + " outside 0.." + std::to_string(pair_count(n)));
  }
}

}  // namespace

void enumerate_by_vertices(int n, const GraphVisitor& visit) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw CapacityError("enumeration by vertices supports n <= " + std::to_string(kMaxEnumerationOrder) + ", got " +
                        std::to_string(n));
  }
  VertexGrower(n, visit).run();
}

std::vector<Graph> enumerate_by_vertices(int n) {
  std::vector<Graph> out;
  enumerate_by_vertices(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

const std::vector<Graph>& connected_graphs_with_edges(int k) { return catalog().level(k); }

void enumerate_by_edges(int k, int max_n, const GraphVisitor& visit) {
  if (k < 0 || k > kMaxEnumerationEdges) {
    throw CapacityError("enumeration by edges supports k <= " + std::to_string(kMaxEnumerationEdges) + ", got " +
                        std::to_string(k));
  }
  if (k == 0) {
    visit(Graph(0));
    return;
  }
  if (max_n >= 0 && min_vertices_for(k) > max_n) return;
  MultisetBuilder(k, max_n, visit).run();
}

std::vector<Graph> enumerate_by_edges(int k, int max_n) {
  std::vector<Graph> out;
  enumerate_by_edges(k, max_n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

Graph pad_to_order(const Graph& g, int n) {
  if (n < g.order()) throw std::invalid_argument("cannot pad a graph to a smaller order");
  return disjoint_union(g, empty_graph(n - g.order()));
}

Rational ExactCount::probability() const {
  if (classes == 0) return Rational(0);
  return Rational(solvable, classes);
}

bool exact_supported(int n, int e) {
  if (n < 0 || n > kMaxVertices || e < 0 || e > pair_count(n)) return false;
  return n <= kMaxEnumerationOrder || std::min(e, pair_count(n) - e) <= kMaxEnumerationEdges;
}

ExactCount exact_count(int n, int e) {
  check_instance(n, e);
  if (n <= kMaxEnumerationOrder) return cached_table(n)[e];
  const int pairs = pair_count(n);
  const int sparse = std::min(e, pairs - e);
  if (sparse > kMaxEnumerationEdges) {
    throw UnsupportedRange("no exact method for n=" + std::to_string(n) + ", e=" + std::to_string(e) +
                           " (needs n <= 9 or min(e, N-e) <= 12)");
  }
  const bool flip = sparse != e;
  ExactCount out;
  out.n = n;
  out.e = e;
  long long classes = 0;
  long long solvable = 0;
  enumerate_by_edges(sparse, n, [&](const Graph& core) {
    Graph g = pad_to_order(core, n);
    if (flip) g = complement(g);
    ++classes;
    if (is_universally_solvable(g)) ++solvable;
  });
  out.classes = classes;
  out.solvable = solvable;
  return out;
}

BigInt count_graphs(int n, int e) { return exact_count(n, e).classes; }

Rational exact_probability(int n, int e) { return exact_count(n, e).probability(); }

std::vector<ExactCount> exact_table(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw UnsupportedRange("exact tables need n <= " + std::to_string(kMaxEnumerationOrder));
  }
  return cached_table(n);
}

std::string to_decimal(const Rational& q, int digits) {
  BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  const BigInt scaled = (num * scale * 2 + den) / (den * 2);
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  if (digits > 0) frac.insert(frac.begin(), digits - static_cast<int>(frac.size()), '0');
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace lightsout
