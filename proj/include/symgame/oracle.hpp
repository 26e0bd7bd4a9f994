#pragma once

#include <optional>
#include <vector>

#include "symgame/config.hpp"
#include "symgame/game.hpp"

namespace symgame {

// Player relabeling sigma: mapping[i-1] = sigma(i), a bijection of 1..n.
// Kept separate from PermutationMatrix on purpose: the brute-force checker
// works on payoff tables by index arithmetic only, so its verdicts are an
// independent reference for the matrix route.
struct Permutation {
  std::vector<int> mapping;

  int degree() const { return static_cast<int>(mapping.size()); }
  int apply(int i) const { return mapping[static_cast<std::size_t>(i - 1)]; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

// All n! permutations in lexicographic order. Guarded at n <= 8.
std::vector<Permutation> all_permutations(int n);

// True when every payoff satisfies c_i(x) = c_{sigma(i)}(x at sigma-inverse
// positions) across all profiles.
bool invariant_under(const FiniteGame& game, const Permutation& sigma,
                     double tol = kDefaultTolerance);

struct OracleWitness {
  Permutation sigma;
  int player;
  StrategyProfile profile;
  double lhs;
  double rhs;
};

// First violation in (sigma, player, profile) scan order, or empty when the
// game is symmetric. With adjacent_only the scan covers just the n-1
// neighbor swaps, which generate the full group.
std::optional<OracleWitness> find_symmetry_violation(const FiniteGame& game,
                                                     double tol = kDefaultTolerance,
                                                     bool adjacent_only = false);

bool brute_force_symmetric(const FiniteGame& game, double tol = kDefaultTolerance);
bool brute_force_symmetric_adjacent(const FiniteGame& game, double tol = kDefaultTolerance);

}  // namespace symgame
