#include "symgame/sparse.hpp"

#include <algorithm>

#include "symgame/error.hpp"

namespace symgame {

void SparseMatrix::add(std::size_t row, std::size_t col, Rational value) {
  if (row >= rows_ || col >= cols_) throw ValueError("sparse entry out of bounds");
  if (value.is_zero()) return;
  entries_.push_back(Triplet{row, col, value});
}

void SparseMatrix::canonicalize() {
  std::sort(entries_.begin(), entries_.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<Triplet> merged;
  merged.reserve(entries_.size());
  for (const Triplet& t : entries_) {
    if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col) {
      merged.back().value += t.value;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Triplet& t) { return t.value.is_zero(); });
  entries_ = std::move(merged);
}

std::string SparseMatrix::to_triplet_text() const {
  SparseMatrix sorted = *this;
  sorted.canonicalize();
  std::string out;
  for (const Triplet& t : sorted.entries_) {
    out += std::to_string(t.row + 1);
    out += ' ';
    out += std::to_string(t.col + 1);
    out += ' ';
    out += t.value.to_string();
    out += '\n';
  }
  return out;
}

std::vector<Rational> SparseMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionError("sparse apply: vector length mismatch");
  std::vector<Rational> out(rows_);
  for (const Triplet& t : entries_) out[t.row] += t.value * x[t.col];
  return out;
}

std::vector<double> SparseMatrix::apply(std::span<const double> x) const {
  if (x.size() != cols_) throw DimensionError("sparse apply: vector length mismatch");
  std::vector<double> out(rows_, 0.0);
  for (const Triplet& t : entries_) out[t.row] += t.value.to_double() * x[t.col];
  return out;
}

Matrix<Rational> SparseMatrix::dense() const {
  Matrix<Rational> out(rows_, cols_);
  for (const Triplet& t : entries_) out(t.row, t.col) += t.value;
  return out;
}

SparseMatrix SparseMatrix::from_dense(const Matrix<Rational>& m) {
  SparseMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.add(r, c, m(r, c));
  return out;
}

SparseMatrix SparseMatrix::hconcat(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hconcat row mismatch");
  SparseMatrix out(a.rows(), a.cols() + b.cols());
  out.entries_ = a.entries_;
  for (const Triplet& t : b.entries_) out.entries_.push_back({t.row, a.cols() + t.col, t.value});
  return out;
}

SparseMatrix SparseMatrix::vconcat(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vconcat column mismatch");
  SparseMatrix out(a.rows() + b.rows(), a.cols());
  out.entries_ = a.entries_;
  for (const Triplet& t : b.entries_) out.entries_.push_back({a.rows() + t.row, t.col, t.value});
  return out;
}

}  // namespace symgame
