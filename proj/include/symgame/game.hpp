#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symgame/error.hpp"

namespace symgame {

// One pure strategy per player, entries 1..k.
struct StrategyProfile {
  std::vector<int> choices;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

// Finite game with n players over a common k-element strategy set. Payoffs
// are stored player-major: row i is the structure vector of player i, one
// entry per strategy profile in the fixed lexicographic column order
// (choice of player 1 most significant).
class FiniteGame {
 public:
  FiniteGame(int players, int strategies, std::vector<double> payoffs);

  int players() const { return players_; }
  int strategies() const { return strategies_; }
  std::size_t profile_count() const { return profile_count_; }

  // player and index are 1-based.
  double payoff(int player, std::size_t index) const;
  double payoff(int player, const StrategyProfile& profile) const;

  std::span<const double> row(int player) const;

  // vec(V_G): rows concatenated player-major, length n * k^n.
  const std::vector<double>& flat() const { return payoffs_; }

  FiniteGame with_payoff(int player, std::size_t index, double value) const;

 private:
  int players_;
  int strategies_;
  std::size_t profile_count_;
  std::vector<double> payoffs_;
};

// 1-based column index of the profile under the fixed lexicographic order:
// index = sum_t (choices[t]-1) * k^(n-t) + 1.
std::size_t profile_to_index(const StrategyProfile& profile, int strategies);
StrategyProfile index_to_profile(std::size_t index, int players, int strategies);

// Game document (JSON): {"players": n, "strategies": k,
// "payoffs": [[k^n numbers] x n]}. Numbers may be JSON numerals or "p/q"
// fraction strings.
FiniteGame load_game(std::string_view text);
std::string save_game(const FiniteGame& game);

}  // namespace symgame
