#pragma once

#include <cstdint>
#include <vector>

#include "symgame/game.hpp"
#include "symgame/matrix.hpp"
#include "symgame/rational.hpp"
#include "symgame/sparse.hpp"

namespace symgame {

// All distinct rearrangements of one nondecreasing tuple over 1..k. The
// representative is the sorted tuple and is always members.front().
struct MultisetClass {
  std::vector<int> representative;
  std::vector<std::vector<int>> members;  // lexicographic order
};

// Nondecreasing tuples of the given length over 1..k, lexicographic order.
// Count is C(k+len-1, len).
std::vector<MultisetClass> multiset_classes(int length, int k);

std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

// Dimension of the symmetric-game subspace: k * C(k+n-2, n-1).
std::uint64_t dimension(int players, int strategies);

// Indicator solutions of the slot-swap equations on k^(n-1) coordinates:
// one 0/1 column per multiset class. Shape k^(n-1) x C(k+n-2, n-1).
Matrix<Rational> eta_basis(int players, int strategies);

// Basis of the orthogonal complement: one +1/-1 difference column per
// non-representative member of each class, classes then members in
// lexicographic order. Shape k^(n-1) x (k^(n-1) - C(k+n-2, n-1)).
Matrix<Rational> zeta_complement(int players, int strategies);

struct BasisColumn {
  std::size_t class_index;  // 0-based into classes()
  int strategy;             // 1..k
};

// Basis matrix of the symmetric-game subspace, stacked player-major like
// vec(V_G). Every row carries exactly one 1 (the columns partition the
// payoff positions), which the compact row-to-column map exploits.
class SymSubspaceBasis {
 public:
  SymSubspaceBasis(int players, int strategies, std::vector<MultisetClass> classes,
                   std::vector<std::uint32_t> column_of_row);

  int players() const { return players_; }
  int strategies() const { return strategies_; }
  std::size_t rows() const { return column_of_row_.size(); }
  std::size_t columns() const { return static_cast<std::size_t>(strategies_) * classes_.size(); }

  const std::vector<MultisetClass>& classes() const { return classes_; }

  // 0-based column holding the single 1 of the given 0-based row.
  std::uint32_t column_of_row(std::size_t row) const { return column_of_row_[row]; }

  BasisColumn column_label(std::size_t col) const;

  SparseMatrix sparse() const;

  FiniteGame column_as_game(std::size_t col) const;

 private:
  int players_;
  int strategies_;
  std::vector<MultisetClass> classes_;
  std::vector<std::uint32_t> column_of_row_;
};

SymSubspaceBasis symmetric_subspace_basis(int players, int strategies);

struct Projection {
  FiniteGame game;
  double distance;  // Euclidean distance from the input to the subspace
};

// Orthogonal projection of vec(V_G) onto the symmetric-game subspace.
Projection project_symmetric(const FiniteGame& game);

// Deterministic symmetric game: basis * coefficients with coefficients drawn
// from a fixed-seed generator, uniform over [lo, hi].
FiniteGame random_symmetric_game(int players, int strategies, std::uint64_t seed,
                                 double lo = -10.0, double hi = 10.0);

}  // namespace symgame
