#pragma once

#include <cstddef>

#include "symgame/matrix.hpp"
#include "symgame/rational.hpp"
#include "symgame/sparse.hpp"

namespace symgame {

// Exact row-echelon rank over the rationals. No pivoting heuristics beyond
// leading-column order; every step is exact, so the result is the true rank.
std::size_t rank(const SparseMatrix& m);
std::size_t rank(const Matrix<Rational>& m);

inline std::size_t nullity(const SparseMatrix& m) { return m.cols() - rank(m); }

// True when the column spans coincide: rank(a) == rank(b) == rank([a | b]).
bool same_column_span(const SparseMatrix& a, const SparseMatrix& b);

// True when the row spaces coincide, i.e. the two systems have identical
// solution sets.
bool same_row_space(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace symgame
