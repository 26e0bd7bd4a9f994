#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "symgame/matrix.hpp"
#include "symgame/rational.hpp"

namespace symgame {

struct Triplet {
  std::size_t row;  // 0-based
  std::size_t col;  // 0-based
  Rational value;
};

// Coordinate-form sparse matrix with exact rational entries. Rows with no
// stored entries are legal (identity-minus-involution blocks produce them).
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Triplet>& entries() const { return entries_; }

  void add(std::size_t row, std::size_t col, Rational value);

  // Sorts by (row, col), merges duplicates, drops zeros.
  void canonicalize();

  // One "row col value" line per entry, 1-based, row-major order.
  std::string to_triplet_text() const;

  std::vector<Rational> apply(std::span<const Rational> x) const;
  std::vector<double> apply(std::span<const double> x) const;

  Matrix<Rational> dense() const;

  static SparseMatrix from_dense(const Matrix<Rational>& m);

  // [a | b] and [a ; b].
  static SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b);
  static SparseMatrix vconcat(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Triplet> entries_;
};

}  // namespace symgame
