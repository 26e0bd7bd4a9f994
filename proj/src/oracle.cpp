#include "symgame/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symgame {

Permutation Permutation::inverse() const {
  std::vector<int> inv(mapping.size());
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    inv[static_cast<std::size_t>(mapping[i] - 1)] = static_cast<int>(i + 1);
  }
  return Permutation{std::move(inv)};
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw ValueError("permutation degree must be positive");
  if (n > 8) throw ValueError("permutation enumeration is guarded at degree 8");
  std::vector<int> mapping(static_cast<std::size_t>(n));
  std::iota(mapping.begin(), mapping.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{mapping});
  } while (std::next_permutation(mapping.begin(), mapping.end()));
  return out;
}

namespace {

std::optional<OracleWitness> violation_for(const FiniteGame& game, const Permutation& sigma,
                                           double tol) {
  const int n = game.players();
  const Permutation inv = sigma.inverse();

  // index of the profile with entries pulled from the sigma-inverse slots
  std::vector<std::size_t> relabeled_index(game.profile_count());
  {
    StrategyProfile profile;
    profile.choices.assign(static_cast<std::size_t>(n), 1);
    StrategyProfile relabeled;
    relabeled.choices.assign(static_cast<std::size_t>(n), 1);
    for (std::size_t index = 1; index <= game.profile_count(); ++index) {
      for (int t = 1; t <= n; ++t) {
        relabeled.choices[static_cast<std::size_t>(t - 1)] =
            profile.choices[static_cast<std::size_t>(inv.apply(t) - 1)];
      }
      relabeled_index[index - 1] = profile_to_index(relabeled, game.strategies());
      for (int t = n - 1; t >= 0; --t) {
        int& c = profile.choices[static_cast<std::size_t>(t)];
        if (c < game.strategies()) {
          ++c;
          break;
        }
        c = 1;
      }
    }
  }

  for (int i = 1; i <= n; ++i) {
    for (std::size_t index = 1; index <= game.profile_count(); ++index) {
      const double lhs = game.payoff(i, index);
      const double rhs = game.payoff(sigma.apply(i), relabeled_index[index - 1]);
      if (std::abs(lhs - rhs) > tol) {
        return OracleWitness{sigma, i, index_to_profile(index, n, game.strategies()), lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool invariant_under(const FiniteGame& game, const Permutation& sigma, double tol) {
  if (sigma.degree() != game.players()) {
    throw DimensionError("permutation degree does not match player count");
  }
  return !violation_for(game, sigma, tol).has_value();
}

std::optional<OracleWitness> find_symmetry_violation(const FiniteGame& game, double tol,
                                                     bool adjacent_only) {
  const int n = game.players();
  if (adjacent_only) {
    for (int r = 1; r <= n - 1; ++r) {
      std::vector<int> mapping(static_cast<std::size_t>(n));
      std::iota(mapping.begin(), mapping.end(), 1);
      std::swap(mapping[static_cast<std::size_t>(r - 1)], mapping[static_cast<std::size_t>(r)]);
      if (auto witness = violation_for(game, Permutation{std::move(mapping)}, tol)) {
        return witness;
      }
    }
    return std::nullopt;
  }
  for (const Permutation& sigma : all_permutations(n)) {
    if (auto witness = violation_for(game, sigma, tol)) return witness;
  }
  return std::nullopt;
}

bool brute_force_symmetric(const FiniteGame& game, double tol) {
  return !find_symmetry_violation(game, tol, false).has_value();
}

bool brute_force_symmetric_adjacent(const FiniteGame& game, double tol) {
  return !find_symmetry_violation(game, tol, true).has_value();
}

}  // namespace symgame
