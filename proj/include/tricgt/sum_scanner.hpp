// Types of disjunctive sums over a fixed, option-closed base of games,
// computed without interning the sums.
//
// For a base B of n games (ascending ids, closed under options, containing the
// null game) the scanner tabulates the type of every sum of `order` base
// members. A game g whose options all lie in B then gets a profile: the types
// of g + b for every b in B and of c*g for c = 1..order. Profiles are built
// from the base tables alone, so any number of threads may build them at once.
//
// Indices into B are ordered like ids, and every option has a smaller id than
// its parent, so replacing one summand by an option always lowers the flat
// tuple index. Each table is therefore filled by a single ascending pass.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tricgt/classify.hpp"
#include "tricgt/game_store.hpp"

namespace tricgt {

class SumScanner {
 public:
  struct Profile {
    GameId game;
    GameType type = GameType::T0;
    // Base indices of the options of `game`.
    std::vector<std::uint32_t> option_indices;
    // with_base[i] = type(game + base[i]).
    std::vector<GameType> with_base;
    // multiples[c] = type(c * game) for c = 0..order.
    std::vector<GameType> multiples;
  };

  // Throws std::invalid_argument when `base` is not option-closed or lacks
  // the null game, CapacityError when n^order is too large to tabulate.
  SumScanner(const GameStore& store, std::span<const GameId> base, std::size_t order);

  std::size_t order() const { return order_; }
  std::span<const GameId> base() const { return base_; }
  std::optional<std::uint32_t> index_of(GameId g) const;

  // True when every option of g lies in the base.
  bool covers(GameId g) const;

  // Type of the sum of base[indices[0]] + base[indices[1]] + ...; at most
  // order() summands.
  GameType base_sum_type(std::span<const std::uint32_t> indices) const;

  // Requires covers(g). Reads only immutable state.
  Profile profile(GameId g) const;

  // Type of a.game + b.game, for any two covered games.
  static GameType pair_type(const Profile& a, const Profile& b);

 private:
  const GameStore& store_;
  std::vector<GameId> base_;
  std::unordered_map<GameId, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> base_options_;
  std::size_t order_;
  std::vector<std::size_t> powers_;  // n^0 .. n^order
  std::vector<GameType> tuples_;     // n^order entries
};

}  // namespace tricgt
