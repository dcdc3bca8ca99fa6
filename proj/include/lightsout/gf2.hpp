#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lightsout/graph.hpp"

namespace lightsout {

// Column vector over GF(2); bit k holds coordinate k.
struct Gf2Vector {
  int length = 0;
  Row bits = 0;

  bool operator==(const Gf2Vector&) const = default;
};

// Square matrix over GF(2) with bit-packed rows (bit c of row r is entry (r, c)).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  explicit Gf2Matrix(int dim);

  static Gf2Matrix identity(int dim);
  static Gf2Matrix from_rows(std::span<const Row> rows);

  int dim() const { return dim_; }
  bool get(int r, int c) const { return (rows_[r] >> c) & 1U; }
  void set(int r, int c, bool value);
  Row row(int r) const { return rows_[r]; }
  std::span<const Row> rows() const { return rows_; }

  Gf2Vector multiply(const Gf2Vector& x) const;
  Gf2Matrix multiply(const Gf2Matrix& other) const;
  Gf2Matrix transpose() const;

  bool operator==(const Gf2Matrix&) const = default;

 private:
  int dim_ = 0;
  std::vector<Row> rows_;
};

// Adjacency matrix plus identity.
Gf2Matrix neighborhood_matrix(const Graph& g);

int rank(const Gf2Matrix& m);
bool is_invertible(const Gf2Matrix& m);

// Solution set of m x = b: one particular solution (free variables zero) and a
// basis of the kernel, one vector per free column in increasing column order.
struct AffineSolution {
  Gf2Vector particular;
  std::vector<Gf2Vector> kernel_basis;
};

std::optional<AffineSolution> solve_affine(const Gf2Matrix& m, const Gf2Vector& b);

// Canonical solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b);

}  // namespace lightsout
