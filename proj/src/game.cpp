#include "symgame/game.hpp"

#include <cmath>

#include <json.hpp>

#include "symgame/config.hpp"
#include "symgame/rational.hpp"

namespace symgame {

FiniteGame::FiniteGame(int players, int strategies, std::vector<double> payoffs)
    : players_(players), strategies_(strategies), payoffs_(std::move(payoffs)) {
  if (players_ < 2) throw ValueError("a game needs at least two players");
  if (strategies_ < 1) throw ValueError("a game needs at least one strategy");
  profile_count_ = checked_pow(static_cast<std::size_t>(strategies_),
                               static_cast<unsigned>(players_));
  if (profile_count_ > size_cap() / static_cast<std::size_t>(players_)) {
    throw SizeLimitError("payoff table exceeds the size cap");
  }
  if (payoffs_.size() != profile_count_ * static_cast<std::size_t>(players_)) {
    throw DimensionError("payoff grid must hold players * strategies^players entries, got " +
                         std::to_string(payoffs_.size()));
  }
  for (double v : payoffs_) {
    if (!std::isfinite(v)) throw ValueError("payoff entries must be finite");
  }
}

double FiniteGame::payoff(int player, std::size_t index) const {
  if (player < 1 || player > players_) throw ValueError("player out of range");
  if (index < 1 || index > profile_count_) throw ValueError("profile index out of range");
  return payoffs_[static_cast<std::size_t>(player - 1) * profile_count_ + index - 1];
}

double FiniteGame::payoff(int player, const StrategyProfile& profile) const {
  if (static_cast<int>(profile.choices.size()) != players_) {
    throw DimensionError("profile length does not match player count");
  }
  return payoff(player, profile_to_index(profile, strategies_));
}

std::span<const double> FiniteGame::row(int player) const {
  if (player < 1 || player > players_) throw ValueError("player out of range");
  return {payoffs_.data() + static_cast<std::size_t>(player - 1) * profile_count_,
          profile_count_};
}

FiniteGame FiniteGame::with_payoff(int player, std::size_t index, double value) const {
  if (player < 1 || player > players_) throw ValueError("player out of range");
  if (index < 1 || index > profile_count_) throw ValueError("profile index out of range");
  std::vector<double> payoffs = payoffs_;
  payoffs[static_cast<std::size_t>(player - 1) * profile_count_ + index - 1] = value;
  return FiniteGame(players_, strategies_, std::move(payoffs));
}

std::size_t profile_to_index(const StrategyProfile& profile, int strategies) {
  const std::size_t n = profile.choices.size();
  std::size_t index = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const int c = profile.choices[t];
    if (c < 1 || c > strategies) {
      throw ValueError("strategy choice " + std::to_string(c) + " outside 1.." +
                       std::to_string(strategies));
    }
    index = index * static_cast<std::size_t>(strategies) + static_cast<std::size_t>(c - 1);
  }
  return index + 1;
}

StrategyProfile index_to_profile(std::size_t index, int players, int strategies) {
  const std::size_t count =
      checked_pow(static_cast<std::size_t>(strategies), static_cast<unsigned>(players));
  if (index < 1 || index > count) {
    throw ValueError("profile index " + std::to_string(index) + " outside 1.." +
                     std::to_string(count));
  }
  std::vector<int> choices(static_cast<std::size_t>(players));
  std::size_t rest = index - 1;
  for (int t = players - 1; t >= 0; --t) {
    choices[static_cast<std::size_t>(t)] =
        static_cast<int>(rest % static_cast<std::size_t>(strategies)) + 1;
    rest /= static_cast<std::size_t>(strategies);
  }
  return StrategyProfile{std::move(choices)};
}

namespace {

double payoff_from_json(const nlohmann::json& cell) {
  if (cell.is_string()) {
    return Rational::parse(cell.get<std::string>()).to_double();
  }
  if (cell.is_number()) {
    const double v = cell.get<double>();
    if (!std::isfinite(v)) throw ValueError("payoff entries must be finite");
    return v;
  }
  throw ParseError("payoff entries must be numbers or \"p/q\" strings");
}

}  // namespace

FiniteGame load_game(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid game document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("players") || !doc.contains("strategies") ||
      !doc.contains("payoffs")) {
    throw ParseError("game document needs players, strategies and payoffs fields");
  }
  if (!doc["players"].is_number_integer() || !doc["strategies"].is_number_integer()) {
    throw ParseError("players and strategies must be integers");
  }
  const int n = doc["players"].get<int>();
  const int k = doc["strategies"].get<int>();
  if (n < 2) throw ValueError("a game needs at least two players");
  if (k < 1) throw ValueError("a game needs at least one strategy");
  const auto& rows = doc["payoffs"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw DimensionError("payoffs must hold exactly one row per player");
  }
  const std::size_t count =
      checked_pow(static_cast<std::size_t>(k), static_cast<unsigned>(n));
  std::vector<double> payoffs;
  payoffs.reserve(count * static_cast<std::size_t>(n));
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != count) {
      throw DimensionError("each payoff row must hold strategies^players = " +
                           std::to_string(count) + " entries");
    }
    for (const auto& cell : row) payoffs.push_back(payoff_from_json(cell));
  }
  return FiniteGame(n, k, std::move(payoffs));
}

std::string save_game(const FiniteGame& game) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= game.players(); ++i) {
    auto row = game.row(i);
    rows.push_back(nlohmann::json(std::vector<double>(row.begin(), row.end())));
  }
  nlohmann::json doc{
      {"players", game.players()},
      {"strategies", game.strategies()},
      {"payoffs", rows},
  };
  return doc.dump(2) + "\n";
}

}  // namespace symgame
