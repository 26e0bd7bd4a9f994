#include "symgame/sym_basis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "symgame/config.hpp"
#include "symgame/permutation.hpp"

namespace symgame {

std::vector<MultisetClass> multiset_classes(int length, int k) {
  if (length < 1) throw ValueError("multiset tuples need positive length");
  if (k < 1) throw ValueError("strategy count must be positive");
  std::vector<MultisetClass> classes;
  std::vector<int> tuple(static_cast<std::size_t>(length), 1);
  while (true) {
    MultisetClass cls;
    cls.representative = tuple;
    std::vector<int> member = tuple;
    do {
      cls.members.push_back(member);
    } while (std::next_permutation(member.begin(), member.end()));
    classes.push_back(std::move(cls));

    // next nondecreasing tuple in lexicographic order
    int pos = length - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == k) --pos;
    if (pos < 0) break;
    const int v = tuple[static_cast<std::size_t>(pos)] + 1;
    for (int t = pos; t < length; ++t) tuple[static_cast<std::size_t>(t)] = v;
  }
  return classes;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t factor = n - r + i;
    if (out > UINT64_MAX / factor) throw OverflowError("binomial coefficient overflow");
    out = out * factor / i;
  }
  return out;
}

std::uint64_t dimension(int players, int strategies) {
  if (players < 2) throw ValueError("a game needs at least two players");
  if (strategies < 1) throw ValueError("a game needs at least one strategy");
  const std::uint64_t k = static_cast<std::uint64_t>(strategies);
  const std::uint64_t classes =
      binomial(k + static_cast<std::uint64_t>(players) - 2, static_cast<std::uint64_t>(players) - 1);
  if (classes > UINT64_MAX / k) throw OverflowError("subspace dimension overflow");
  return k * classes;
}

namespace {

// 1-based position of a tuple over 1..k in lexicographic order.
std::size_t tuple_to_index(const std::vector<int>& tuple, int k) {
  std::size_t idx = 0;
  for (int c : tuple) idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(c - 1);
  return idx + 1;
}

}  // namespace

Matrix<Rational> eta_basis(int players, int strategies) {
  if (players < 2) throw ValueError("a game needs at least two players");
  const auto classes = multiset_classes(players - 1, strategies);
  const std::size_t rows = checked_pow(static_cast<std::size_t>(strategies),
                                       static_cast<unsigned>(players - 1));
  Matrix<Rational> out(rows, classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& member : classes[c].members) {
      out(tuple_to_index(member, strategies) - 1, c) = Rational(1);
    }
  }
  return out;
}

Matrix<Rational> zeta_complement(int players, int strategies) {
  if (players < 2) throw ValueError("a game needs at least two players");
  const auto classes = multiset_classes(players - 1, strategies);
  const std::size_t rows = checked_pow(static_cast<std::size_t>(strategies),
                                       static_cast<unsigned>(players - 1));
  std::size_t cols = 0;
  for (const auto& cls : classes) cols += cls.members.size() - 1;
  Matrix<Rational> out(rows, cols);
  std::size_t col = 0;
  for (const auto& cls : classes) {
    const std::size_t rep_row = tuple_to_index(cls.representative, strategies) - 1;
    for (const auto& member : cls.members) {
      if (member == cls.representative) continue;
      out(rep_row, col) = Rational(1);
      out(tuple_to_index(member, strategies) - 1, col) = Rational(-1);
      ++col;
    }
  }
  return out;
}

SymSubspaceBasis::SymSubspaceBasis(int players, int strategies,
                                   std::vector<MultisetClass> classes,
                                   std::vector<std::uint32_t> column_of_row)
    : players_(players),
      strategies_(strategies),
      classes_(std::move(classes)),
      column_of_row_(std::move(column_of_row)) {}

BasisColumn SymSubspaceBasis::column_label(std::size_t col) const {
  if (col >= columns()) throw ValueError("basis column out of range");
  return BasisColumn{col / static_cast<std::size_t>(strategies_),
                     static_cast<int>(col % static_cast<std::size_t>(strategies_)) + 1};
}

SparseMatrix SymSubspaceBasis::sparse() const {
  SparseMatrix out(rows(), columns());
  for (std::size_t r = 0; r < rows(); ++r) out.add(r, column_of_row_[r], Rational(1));
  return out;
}

FiniteGame SymSubspaceBasis::column_as_game(std::size_t col) const {
  if (col >= columns()) throw ValueError("basis column out of range");
  std::vector<double> payoffs(rows(), 0.0);
  for (std::size_t r = 0; r < rows(); ++r) {
    if (column_of_row_[r] == col) payoffs[r] = 1.0;
  }
  return FiniteGame(players_, strategies_, std::move(payoffs));
}

SymSubspaceBasis symmetric_subspace_basis(int players, int strategies) {
  if (players < 2) throw ValueError("a game needs at least two players");
  if (strategies < 1) throw ValueError("a game needs at least one strategy");
  const int n = players;
  const int k = strategies;
  const std::size_t kn = checked_pow(static_cast<std::size_t>(k), static_cast<unsigned>(n));
  if (kn > size_cap() / static_cast<std::size_t>(n)) {
    throw SizeLimitError("basis exceeds the size cap");
  }

  auto classes = multiset_classes(n - 1, k);
  std::vector<std::uint32_t> class_of_tuple(kn / static_cast<std::size_t>(k));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& member : classes[c].members) {
      class_of_tuple[tuple_to_index(member, k) - 1] = static_cast<std::uint32_t>(c);
    }
  }

  // Row t of (M_X x I_k) is (tuple u, strategy s) and carries its 1 in
  // column (class(u), s). Block s of the stack permutes those rows by
  // B_s = I_{k^(s-1)} x W_[k^(n-s), k]; the last block is the identity.
  std::vector<std::uint32_t> column_of_row(static_cast<std::size_t>(n) * kn);
  for (int s = 1; s <= n; ++s) {
    PermutationMatrix block =
        s == n ? PermutationMatrix::identity(kn)
               : kron(PermutationMatrix::identity(
                          checked_pow(static_cast<std::size_t>(k), static_cast<unsigned>(s - 1))),
                      swap_matrix(
                          checked_pow(static_cast<std::size_t>(k), static_cast<unsigned>(n - s)),
                          static_cast<std::size_t>(k)));
    const std::size_t block_offset = static_cast<std::size_t>(s - 1) * kn;
    for (std::size_t t = 0; t < kn; ++t) {
      const std::size_t u = t / static_cast<std::size_t>(k);
      const std::size_t s0 = t % static_cast<std::size_t>(k);
      const std::uint32_t col =
          class_of_tuple[u] * static_cast<std::uint32_t>(k) + static_cast<std::uint32_t>(s0);
      column_of_row[block_offset + block.delta_form()[t] - 1] = col;
    }
  }
  return SymSubspaceBasis(n, k, std::move(classes), std::move(column_of_row));
}

Projection project_symmetric(const FiniteGame& game) {
  const SymSubspaceBasis basis = symmetric_subspace_basis(game.players(), game.strategies());
  const std::vector<double>& vec = game.flat();

  // Basis columns have pairwise disjoint supports, so the least-squares
  // solution is the mean over each column's support. A class whose entries
  // already agree keeps its value bit for bit, making the projection an
  // exact fixed point on symmetric games.
  std::vector<double> sum(basis.columns(), 0.0);
  std::vector<std::size_t> count(basis.columns(), 0);
  std::vector<double> first(basis.columns(), 0.0);
  std::vector<bool> uniform(basis.columns(), true);
  for (std::size_t r = 0; r < vec.size(); ++r) {
    const std::uint32_t col = basis.column_of_row(r);
    if (count[col] == 0) {
      first[col] = vec[r];
    } else if (vec[r] != first[col]) {
      uniform[col] = false;
    }
    sum[col] += vec[r];
    count[col] += 1;
  }
  std::vector<double> projected(vec.size());
  double dist2 = 0.0;
  for (std::size_t r = 0; r < vec.size(); ++r) {
    const std::uint32_t col = basis.column_of_row(r);
    projected[r] = uniform[col] ? first[col] : sum[col] / static_cast<double>(count[col]);
    const double d = vec[r] - projected[r];
    dist2 += d * d;
  }
  return Projection{FiniteGame(game.players(), game.strategies(), std::move(projected)),
                    std::sqrt(dist2)};
}

FiniteGame random_symmetric_game(int players, int strategies, std::uint64_t seed, double lo,
                                 double hi) {
  if (hi < lo) throw ValueError("empty coefficient range");
  const SymSubspaceBasis basis = symmetric_subspace_basis(players, strategies);
  std::mt19937_64 rng(seed);
  std::vector<double> coeff(basis.columns());
  for (double& c : coeff) {
    // fixed uint64 -> [0,1) mapping, stable across platforms
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    c = lo + u * (hi - lo);
  }
  std::vector<double> payoffs(basis.rows());
  for (std::size_t r = 0; r < basis.rows(); ++r) payoffs[r] = coeff[basis.column_of_row(r)];
  return FiniteGame(players, strategies, std::move(payoffs));
}

}  // namespace symgame
