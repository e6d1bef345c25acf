#include "tricgt/enumeration.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

namespace tricgt {

bool Universe::contains(GameId g) const { return std::binary_search(members.begin(), members.end(), g); }

std::size_t universe_size(std::size_t day) {
  if (day > kMaxUniverseDay) {
    throw CapacityError("day " + std::to_string(day) + " universe has 2^65536 games");
  }
  std::size_t n = 1;
  for (std::size_t d = 0; d < day; ++d) n = std::size_t{1} << n;
  return n;
}

Universe universe(GameStore& store, std::size_t day) {
  if (day > kMaxUniverseDay) {
    throw CapacityError("cannot enumerate day " + std::to_string(day) +
                        ": it has 2^65536 games; use sampling beyond day " +
                        std::to_string(kMaxUniverseDay));
  }
  if (day == 0) return Universe{0, {kNullGame}};

  const Universe prev = universe(store, day - 1);
  const std::size_t n = prev.size();
  std::vector<std::vector<GameId>> option_sets;
  option_sets.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<GameId> opts;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) opts.push_back(prev.members[i]);
    }
    option_sets.push_back(std::move(opts));
  }
  std::sort(option_sets.begin(), option_sets.end());

  Universe u{day, {}};
  u.members.reserve(option_sets.size());
  for (const auto& opts : option_sets) u.members.push_back(store.intern(opts));
  std::sort(u.members.begin(), u.members.end());
  return u;
}

Census census(Classifier& classifier, std::span<const GameId> games) {
  Census c;
  for (GameId g : games) ++c.counts[index_of(classifier.classify(g))];
  return c;
}

std::vector<GameId> sample_games(GameStore& store, std::size_t count, std::size_t max_birthday,
                                 std::size_t max_width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Sampled games that may still appear as options, with their birthdays.
  std::vector<std::pair<GameId, std::size_t>> eligible{{kNullGame, 0}};
  std::unordered_set<GameId> pooled{kNullGame};

  std::vector<GameId> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (max_birthday == 0 || max_width == 0) {
      out.push_back(kNullGame);
      continue;
    }
    std::uniform_int_distribution<std::size_t> width_dist(1, max_width);
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    const std::size_t width = width_dist(rng);
    std::vector<GameId> opts;
    std::size_t birthday = 0;
    for (std::size_t w = 0; w < width; ++w) {
      const auto& [g, b] = eligible[pick(rng)];
      opts.push_back(g);
      birthday = std::max(birthday, b + 1);
    }
    const GameId g = store.intern(opts);
    out.push_back(g);
    if (pooled.insert(g).second && birthday < max_birthday) eligible.emplace_back(g, birthday);
  }
  return out;
}

bool option_closed(const GameStore& store, std::span<const GameId> games) {
  const std::unordered_set<GameId> members(games.begin(), games.end());
  for (GameId g : games) {
    for (GameId o : store.options(g)) {
      if (!members.contains(o)) return false;
    }
  }
  return true;
}

}  // namespace tricgt
