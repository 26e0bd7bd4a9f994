#include "symgame/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace symgame {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

// a - coeff * b, both sorted; zeros dropped.
SparseRow subtract_scaled(const SparseRow& a, const Rational& coeff, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(coeff * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - coeff * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

class Eliminator {
 public:
  // Reduces the row against the pivots seen so far; keeps it as a new pivot
  // when something nonzero is left. Returns true in that case.
  bool insert(SparseRow row) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto it = pivot_by_col_.find(lead);
      if (it == pivot_by_col_.end()) {
        const Rational inv_lead = Rational(1) / row.front().second;
        for (auto& [col, v] : row) v *= inv_lead;
        pivot_by_col_.emplace(lead, std::move(row));
        return true;
      }
      row = subtract_scaled(row, row.front().second, it->second);
    }
    return false;
  }

  std::size_t rank() const { return pivot_by_col_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivot_by_col_;
};

std::vector<SparseRow> gather_rows(const SparseMatrix& m) {
  SparseMatrix sorted = m;
  sorted.canonicalize();
  std::vector<SparseRow> rows(m.rows());
  for (const Triplet& t : sorted.entries()) rows[t.row].emplace_back(t.col, t.value);
  return rows;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  Eliminator elim;
  for (SparseRow& row : gather_rows(m)) elim.insert(std::move(row));
  return elim.rank();
}

std::size_t rank(const Matrix<Rational>& m) { return rank(SparseMatrix::from_dense(m)); }

bool same_column_span(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows()) return false;
  const std::size_t ra = rank(a);
  const std::size_t rb = rank(b);
  if (ra != rb) return false;
  return rank(SparseMatrix::hconcat(a, b)) == ra;
}

bool same_row_space(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rank(a);
  const std::size_t rb = rank(b);
  if (ra != rb) return false;
  return rank(SparseMatrix::vconcat(a, b)) == ra;
}

}  // namespace symgame
