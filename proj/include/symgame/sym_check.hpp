#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symgame/config.hpp"
#include "symgame/game.hpp"
#include "symgame/permutation.hpp"
#include "symgame/sparse.hpp"

namespace symgame {

// Permutation realizing the swap of strategy slots r and r+1 on profile
// columns: I_{k^(r-1)} x W_[k] x I_{k^(n-r-1)}, an involution of size k^n.
struct TransposeOperator {
  int r;
  int n;
  int k;
  PermutationMatrix perm;
};

TransposeOperator t_mu(int r, int players, int strategies);

enum class CheckMethod { transpositions, minimal, full_system };

std::string to_string(CheckMethod method);

struct Violation {
  std::string equation;       // e.g. "V1=V2*T1" or "x3=x5"
  std::uint64_t lhs_index;    // 1-based position in vec(V_G)
  std::uint64_t rhs_index;
  double difference;          // lhs value minus rhs value
};

struct CheckReport {
  bool symmetric;
  CheckMethod method;
  double max_residual;
  std::vector<Violation> violations;
};

// Direct test: every structure vector must equal the structure vector of the
// swapped player times the matching slot transposition, for all players i and
// all slots r. n(n-1) row equations of length k^n.
CheckReport check_transpositions(const FiniteGame& game, double tol = kDefaultTolerance);

// Reduced test with the minimum number of equations: the chain
// V_i = V_{i+1} * T_r for i = 1..n-1 plus, on the last structure vector only,
// equality of entries across each multiset class of the first n-1 strategy
// slots. For n = 2 the class part is empty.
CheckReport check_minimal(const FiniteGame& game, double tol = kDefaultTolerance);

// Residual of the assembled full linear system against vec(V_G).
CheckReport check_full_system(const FiniteGame& game, double tol = kDefaultTolerance);

// Coefficient matrix of the full test: n-1 bidiagonal block rows [I, -T_r]
// plus n-2 block rows [I - T_j] on the last block column.
// Shape ((2n-3) k^n) x (n k^n).
SparseMatrix build_full_system(int players, int strategies);

// Coefficient matrix of the reduced test: the bidiagonal chain plus the
// class-difference rows on the last block column. Shape
// ((n-1) k^n + k (k^(n-1) - C(k+n-2, n-1))) x (n k^n); full row rank.
SparseMatrix build_minimal_system(int players, int strategies);

}  // namespace symgame
