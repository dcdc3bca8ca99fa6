#include "lightsout/gf2.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace lightsout {

namespace {

struct Elimination {
  std::vector<Row> rows;
  std::vector<std::uint8_t> rhs;
  std::vector<int> pivot_col;  // pivot column of row k, k < rank
  Row pivot_cols = 0;
};

// Reduced row echelon form, pivoting on the first row with a set bit.
Elimination eliminate(const Gf2Matrix& m, Row b, bool full_reduction) {
  const int dim = m.dim();
  Elimination el;
  el.rows.assign(m.rows().begin(), m.rows().end());
  el.rhs.resize(dim);
  for (int r = 0; r < dim; ++r) el.rhs[r] = (b >> r) & 1U;

  int next = 0;
  for (int col = 0; col < dim && next < dim; ++col) {
    int pivot = -1;
    for (int r = next; r < dim; ++r) {
      if ((el.rows[r] >> col) & 1U) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(el.rows[pivot], el.rows[next]);
    std::swap(el.rhs[pivot], el.rhs[next]);
    const int first = full_reduction ? 0 : next + 1;
    for (int r = first; r < dim; ++r) {
      if (r != next && ((el.rows[r] >> col) & 1U)) {
        el.rows[r] ^= el.rows[next];
        el.rhs[r] ^= el.rhs[next];
      }
    }
    el.pivot_col.push_back(col);
    el.pivot_cols |= bit(col);
    ++next;
  }
  return el;
}

void check_vector(const Gf2Matrix& m, const Gf2Vector& v) {
  if (v.length != m.dim() || (v.bits & ~low_mask(v.length)) != 0) {
    throw std::invalid_argument("vector of length " + std::to_string(v.length) +
                                " does not match matrix dimension " + std::to_string(m.dim()));
  }
}

}  // namespace

Gf2Matrix::Gf2Matrix(int dim) : dim_(dim), rows_(static_cast<std::size_t>(dim), 0) { check_capacity(dim); }

Gf2Matrix Gf2Matrix::identity(int dim) {
  Gf2Matrix m(dim);
  for (int r = 0; r < dim; ++r) m.rows_[r] = bit(r);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::span<const Row> rows) {
  Gf2Matrix m(static_cast<int>(rows.size()));
  for (int r = 0; r < m.dim_; ++r) {
    if ((rows[r] & ~low_mask(m.dim_)) != 0) throw std::invalid_argument("row wider than matrix dimension");
    m.rows_[r] = rows[r];
  }
  return m;
}

void Gf2Matrix::set(int r, int c, bool value) {
  if (value) {
    rows_[r] |= bit(c);
  } else {
    rows_[r] &= ~bit(c);
  }
}

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& x) const {
  check_vector(*this, x);
  Gf2Vector y{dim_, 0};
  for (int r = 0; r < dim_; ++r) {
    if (std::popcount(rows_[r] & x.bits) & 1) y.bits |= bit(r);
  }
  return y;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("matrix dimensions differ");
  Gf2Matrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    Row acc = 0;
    for (Row b = rows_[r]; b != 0; b &= b - 1) acc ^= other.rows_[std::countr_zero(b)];
    out.rows_[r] = acc;
  }
  return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (Row b = rows_[r]; b != 0; b &= b - 1) out.rows_[std::countr_zero(b)] |= bit(r);
  }
  return out;
}

Gf2Matrix neighborhood_matrix(const Graph& g) {
  Gf2Matrix m(g.order());
  for (int v = 0; v < g.order(); ++v) {
    m.set(v, v, true);
    for (Row b = g.row(v); b != 0; b &= b - 1) m.set(v, std::countr_zero(b), true);
  }
  return m;
}

int rank(const Gf2Matrix& m) {
  return static_cast<int>(eliminate(m, 0, /*full_reduction=*/false).pivot_col.size());
}

bool is_invertible(const Gf2Matrix& m) { return rank(m) == m.dim(); }

std::optional<AffineSolution> solve_affine(const Gf2Matrix& m, const Gf2Vector& b) {
  check_vector(m, b);
  const Elimination el = eliminate(m, b.bits, /*full_reduction=*/true);
  const int r = static_cast<int>(el.pivot_col.size());
  for (int k = r; k < m.dim(); ++k) {
    if (el.rhs[k]) return std::nullopt;
  }
  AffineSolution sol;
  sol.particular.length = m.dim();
  for (int k = 0; k < r; ++k) {
    if (el.rhs[k]) sol.particular.bits |= bit(el.pivot_col[k]);
  }
  for (int f = 0; f < m.dim(); ++f) {
    if ((el.pivot_cols >> f) & 1U) continue;
    Gf2Vector v{m.dim(), bit(f)};
    for (int k = 0; k < r; ++k) {
      if ((el.rows[k] >> f) & 1U) v.bits |= bit(el.pivot_col[k]);
    }
    sol.kernel_basis.push_back(v);
  }
  return sol;
}

std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b) {
  auto sol = solve_affine(m, b);
  if (!sol) return std::nullopt;
  return sol->particular;
}

}  // namespace lightsout
