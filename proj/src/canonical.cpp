#include "lightsout/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace lightsout {

namespace {

using Cells = std::array<Row, kMaxVertices>;

// Splits cells until every cell sees a constant number of neighbors in every
// other cell. Subcells are ordered by that count, so the result depends only
// on the cell structure and not on vertex names.
void refine(const Row* adj, Cells& cells, int& count) {
  std::array<Row, kMaxVertices + 1> groups{};
  std::array<int, kMaxVertices> seen{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < count; ++s) {
      const Row splitter = cells[s];
      for (int x = 0; x < count; ++x) {
        const Row cell = cells[x];
        if ((cell & (cell - 1)) == 0) continue;
        int lo = kMaxVertices;
        int hi = 0;
        for (Row b = cell; b != 0; b &= b - 1) {
          const int v = std::countr_zero(b);
          const int c = std::popcount(adj[v] & splitter);
          seen[v] = c;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) continue;
        for (int c = lo; c <= hi; ++c) groups[c] = 0;
        for (Row b = cell; b != 0; b &= b - 1) {
          const int v = std::countr_zero(b);
          groups[seen[v]] |= bit(v);
        }
        int pieces = 0;
        std::array<Row, kMaxVertices> split{};
        for (int c = lo; c <= hi; ++c) {
          if (groups[c] != 0) split[pieces++] = groups[c];
        }
        std::copy_backward(cells.begin() + x + 1, cells.begin() + count, cells.begin() + count + pieces - 1);
        std::copy(split.begin(), split.begin() + pieces, cells.begin() + x);
        count += pieces - 1;
        x += pieces - 1;
        changed = true;
      }
    }
  }
}

// Row-major upper-triangle comparison: earlier rows dominate, and within a
// row the lower column index dominates. A 0 sorts before a 1.
int compare_upper(const Row* a, const Row* b, int n) {
  for (int r = 0; r < n; ++r) {
    const Row above = ~low_mask(r + 1);
    const Row x = a[r] & above;
    const Row y = b[r] & above;
    if (x != y) {
      const int c = std::countr_zero(x ^ y);
      return ((x >> c) & 1U) ? 1 : -1;
    }
  }
  return 0;
}

class Search {
 public:
  explicit Search(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.row(v);
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if ((adj_[u] & ~bit(v)) == (adj_[v] & ~bit(u))) {
          twins_[u] |= bit(v);
          twins_[v] |= bit(u);
        }
      }
    }
  }

  std::vector<int> run() {
    Cells cells{};
    cells[0] = low_mask(n_);
    descend(cells, 1);
    return {best_perm_.begin(), best_perm_.begin() + n_};
  }

 private:
  void descend(Cells cells, int count) {
    refine(adj_.data(), cells, count);
    if (count == n_) {
      leaf(cells);
      return;
    }
    int target = -1;
    int target_size = kMaxVertices + 1;
    for (int k = 0; k < count; ++k) {
      const int size = std::popcount(cells[k]);
      if (size > 1 && size < target_size) {
        target = k;
        target_size = size;
      }
    }
    const Row cell = cells[target];
    Row explored = 0;
    for (Row b = cell; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      // Swapping twins is an automorphism fixing everything individualized
      // so far, so their subtrees yield the same leaves.
      if ((twins_[v] & explored) != 0) continue;
      explored |= bit(v);
      Cells next = cells;
      std::copy_backward(next.begin() + target + 1, next.begin() + count, next.begin() + count + 1);
      next[target] = bit(v);
      next[target + 1] = cell & ~bit(v);
      descend(next, count + 1);
    }
  }

  void leaf(const Cells& cells) {
    std::array<int, kMaxVertices> perm{};
    for (int k = 0; k < n_; ++k) perm[std::countr_zero(cells[k])] = k;
    std::array<Row, kMaxVertices> rows{};
    for (int v = 0; v < n_; ++v) {
      Row r = 0;
      for (Row b = adj_[v]; b != 0; b &= b - 1) r |= bit(perm[std::countr_zero(b)]);
      rows[perm[v]] = r;
    }
    if (!have_best_ || compare_upper(rows.data(), best_rows_.data(), n_) < 0) {
      have_best_ = true;
      best_rows_ = rows;
      best_perm_ = perm;
    }
  }

  int n_;
  std::array<Row, kMaxVertices> adj_{};
  std::array<Row, kMaxVertices> twins_{};
  bool have_best_ = false;
  std::array<Row, kMaxVertices> best_rows_{};
  std::array<int, kMaxVertices> best_perm_{};
};

Graph induced(const Graph& g, const VertexSet& keep) {
  return delete_vertices(g, VertexSet(g.order(), ~keep.bits() & low_mask(g.order())));
}

std::vector<int> label(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (n <= 1) return perm;

  // Work on the sparser of g and its complement; both have the same
  // automorphisms, and one of the two is connected.
  const Graph work = 2 * g.edge_count() > pair_count(n) ? complement(g) : g;
  const auto comps = connected_components(work);
  if (comps.size() == 1) return Search(work).run();

  struct Piece {
    std::vector<int> vertices;
    std::vector<int> local_perm;
    CanonicalForm form;
  };
  std::vector<Piece> pieces;
  pieces.reserve(comps.size());
  for (const auto& comp : comps) {
    Piece p;
    p.vertices = comp.to_vector();
    const Graph sub = induced(work, comp);
    p.local_perm = label(sub);
    p.form = pack_upper_triangle(relabel(sub, p.local_perm));
    pieces.push_back(std::move(p));
  }
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.form < b.form; });
  int offset = 0;
  for (const auto& p : pieces) {
    for (std::size_t k = 0; k < p.vertices.size(); ++k) perm[p.vertices[k]] = offset + p.local_perm[k];
    offset += static_cast<int>(p.vertices.size());
  }
  return perm;
}

}  // namespace

std::string CanonicalForm::bitstring() const {
  std::string out;
  const int bits = pair_count(order);
  out.reserve(bits);
  for (int k = 0; k < bits; ++k) out.push_back(((words[k / 64] >> (k % 64)) & 1U) ? '1' : '0');
  return out;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.order);
  for (std::uint64_t w : f.words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

CanonicalForm pack_upper_triangle(const Graph& g) {
  const int n = g.order();
  CanonicalForm f;
  f.order = n;
  f.words.assign((pair_count(n) + 63) / 64, 0);
  int k = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c, ++k) {
      if (g.has_edge(r, c)) f.words[k / 64] |= std::uint64_t{1} << (k % 64);
    }
  }
  return f;
}

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw CapacityError("canonical labeling supports at most " + std::to_string(kMaxCanonicalOrder) +
                        " vertices, got " + std::to_string(g.order()));
  }
  return label(g);
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

CanonicalForm canonical_form(const Graph& g) { return pack_upper_triangle(canonical_graph(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace lightsout
