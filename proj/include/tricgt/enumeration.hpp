// Complete universes of games by birthday, censuses, and a seeded sampler for
// games beyond full enumeration.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tricgt/classify.hpp"
#include "tricgt/game_store.hpp"

namespace tricgt {

inline constexpr std::size_t kMaxUniverseDay = 4;

// All games with birthday <= day, ascending by id.
struct Universe {
  std::size_t day = 0;
  std::vector<GameId> members;

  std::size_t size() const { return members.size(); }
  bool contains(GameId g) const;
};

// Sizes 1, 2, 4, 16, 65536. On a fresh store the ids are reproducible: the
// previous day's games keep their ids and new games follow in lexicographic
// order of their option-id sets.
Universe universe(GameStore& store, std::size_t day);

// u(0) = 1, u(d) = 2^u(d-1).
std::size_t universe_size(std::size_t day);

struct Census {
  std::array<std::size_t, 4> counts{};

  std::size_t operator[](GameType t) const { return counts[index_of(t)]; }
  std::size_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  bool operator==(const Census&) const = default;
};

Census census(Classifier& classifier, std::span<const GameId> games);

// Builds games bottom-up: each new game takes between 1 and max_width options
// drawn uniformly from the games sampled so far whose birthday is below
// max_birthday. Equal arguments on equal stores give equal sequences.
std::vector<GameId> sample_games(GameStore& store, std::size_t count, std::size_t max_birthday,
                                 std::size_t max_width, std::uint64_t seed);

// True when every option of every listed game is itself listed.
bool option_closed(const GameStore& store, std::span<const GameId> games);

}  // namespace tricgt
