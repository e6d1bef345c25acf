// Interned store of finite impartial games.
//
// Design decisions:
// - A game is identified by a dense GameId into an append-only node arena.
// - Every node's options are a sorted, duplicate-free sequence of ids that are
//   all strictly smaller than the node's own id, so the store is acyclic.
// - Nodes are hash-consed: two games are identical iff their ids are equal.
// - Construction is single-threaded. Reads are safe from any number of
//   threads while no construction is in progress.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tricgt {

struct GameId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const GameId&) const = default;
};

inline constexpr GameId kNullGame{0};

// Unknown option id handed to the store.
class InvalidReference : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Argument outside the range an operation supports.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Request too large to materialize.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct GameStats {
  std::size_t option_count = 0;
  std::size_t birthday = 0;
  std::size_t subgame_count = 0;

  bool operator==(const GameStats&) const = default;
};

class GameStore {
 public:
  static constexpr unsigned kMaxHeap = 9;

  GameStore();
  GameStore(const GameStore&) = delete;
  GameStore& operator=(const GameStore&) = delete;

  // Returns the unique game whose option set is `options` (any order, repeats
  // allowed). Throws InvalidReference for ids not in the store.
  GameId intern(std::span<const GameId> options);
  GameId intern(std::initializer_list<GameId> options) {
    return intern(std::span<const GameId>(options.begin(), options.size()));
  }

  // The existing game with exactly these options (sorted, no repeats), if any.
  std::optional<GameId> find(std::span<const GameId> sorted_options) const;

  // Nim heap of size n, i.e. the game {0, 1, ..., n-1}.
  GameId nim_heap(unsigned n);

  // Disjunctive sum. Memoized on the unordered pair.
  GameId sum(GameId a, GameId b);

  // n layers of bracketing: g -> {g}.
  GameId nest(GameId g, std::size_t layers);

  // n-fold sum g + g + ... + g; zero copies is the null game.
  GameId multiple(GameId g, std::size_t copies);

  std::span<const GameId> options(GameId g) const {
    check(g);
    return {arena_.data() + offsets_[g.value], arena_.data() + offsets_[g.value + 1]};
  }

  std::size_t size() const { return offsets_.size() - 1; }
  bool contains(GameId g) const { return g.value < size(); }

  GameStats describe(GameId g) const;

  // Height of the game DAG under g; 0 for the null game.
  std::size_t birthday(GameId g) const { return describe(g).birthday; }

  // Every id in the transitive option closure of g, g included, ascending.
  std::vector<GameId> subgames(GameId g) const;

  // One line per node: "id: opt opt ...".
  void dump(std::ostream& out) const;

  // Throws unless every stored node satisfies the arena invariants.
  void validate() const;

 private:
  struct OptionsHash {
    using is_transparent = void;
    const GameStore* store;
    std::size_t operator()(GameId g) const { return (*this)(store->options(g)); }
    std::size_t operator()(std::span<const GameId> options) const;
  };
  struct OptionsEqual {
    using is_transparent = void;
    const GameStore* store;
    bool operator()(GameId a, GameId b) const { return a == b; }
    bool operator()(std::span<const GameId> a, GameId b) const;
    bool operator()(GameId a, std::span<const GameId> b) const { return (*this)(b, a); }
  };

  void check(GameId g) const {
    if (g.value >= size()) {
      throw InvalidReference("unknown game id " + std::to_string(g.value));
    }
  }
  GameId intern_sorted(std::span<const GameId> options);

  std::vector<std::uint32_t> offsets_;
  std::vector<GameId> arena_;
  std::unordered_set<GameId, OptionsHash, OptionsEqual> index_;
  std::unordered_map<std::uint64_t, GameId> sums_;
  std::vector<GameId> heaps_;
};

}  // namespace tricgt

template <>
struct std::hash<tricgt::GameId> {
  std::size_t operator()(tricgt::GameId g) const noexcept { return std::hash<std::uint32_t>{}(g.value); }
};
