// Outcome types of three-player impartial games and the two independent ways
// of computing them: the recursive option rules and a coalition game search.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tricgt/game_store.hpp"

namespace tricgt {

// Which seat can force the last move against the other two.
//   T0   = Previous wins  (P, bold 0)
//   T1   = Next wins      (N, bold 1)
//   T2   = Other wins     (O, bold 2)
//   TInf = nobody         (Q, bold infinity)
enum class GameType : std::uint8_t { T0 = 0, T1 = 1, T2 = 2, TInf = 3 };

inline constexpr std::array<GameType, 4> kAllTypes{GameType::T0, GameType::T1, GameType::T2,
                                                   GameType::TInf};

constexpr std::size_t index_of(GameType t) { return static_cast<std::size_t>(t); }

// "P", "N", "O", "Q".
std::string_view type_letter(GameType t);
// "0", "1", "2", "∞".
std::string_view type_symbol(GameType t);
// "Q (∞)".
std::string format_type(GameType t);
// Accepts P/N/O/Q, 0/1/2, inf/∞ (case-insensitive letters).
std::optional<GameType> parse_type(std::string_view text);

enum class Seat : std::uint8_t { Next = 0, Other = 1, Previous = 2 };

inline constexpr std::array<Seat, 3> kAllSeats{Seat::Next, Seat::Other, Seat::Previous};

std::string_view seat_name(Seat s);

// Seat a player occupies after one move has been made.
constexpr Seat after_move(Seat s) {
  switch (s) {
    case Seat::Next:
      return Seat::Previous;
    case Seat::Other:
      return Seat::Next;
    case Seat::Previous:
      return Seat::Other;
  }
  return s;
}

// Incremental form of the recursive rules: feed option types, read the result.
class TypeAccumulator {
 public:
  constexpr void add(GameType t) { seen_ |= static_cast<std::uint8_t>(1u << index_of(t)); }
  constexpr bool decided() const { return (seen_ & 1u) != 0; }
  constexpr GameType result() const {
    if (seen_ & 0b0001) return GameType::T1;  // some option is T0
    if (seen_ == 0b0010) return GameType::T2;  // all options T1, at least one
    if ((seen_ & ~0b0100) == 0) return GameType::T0;  // all options T2 (or none)
    return GameType::TInf;
  }

 private:
  std::uint8_t seen_ = 0;
};

GameType type_from_options(std::span<const GameType> option_types);

// Memoized rule-based classification. The memo is one byte per store node.
//
// classify() may be called from several threads once the store is frozen and
// sync() has been called; concurrent writers only ever store equal values.
class Classifier {
 public:
  explicit Classifier(const GameStore& store) : store_(store) {}

  GameType classify(GameId g);
  GameType operator()(GameId g) { return classify(g); }

  // Smallest-id option of type T0 when g is T1.
  std::optional<GameId> winning_option(GameId g);

  // Grow the memo to cover every node currently in the store.
  void sync();

 private:
  GameType classify_synced(GameId g);

  const GameStore& store_;
  std::vector<std::uint8_t> memo_;
};

// Decides whether a given seat can force making the last move when the other
// two seats cooperate. Deliberately shares nothing with Classifier.
class CoalitionOracle {
 public:
  explicit CoalitionOracle(const GameStore& store) : store_(store) {}

  bool wins(GameId g, Seat s);

  // The seat with a forced win, if any.
  std::optional<Seat> winner(GameId g);

 private:
  const GameStore& store_;
  // Per node: bit 2*s set when known, bit 2*s+1 holds the answer.
  std::vector<std::uint8_t> memo_;
};

}  // namespace tricgt
