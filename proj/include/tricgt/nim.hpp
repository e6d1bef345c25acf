// Three-player Nim: positions as heap multisets, reduction to the basic
// positions 0, 1^a, 1^a 2, 3, 22, and the closed-form type.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tricgt/context.hpp"

namespace tricgt {

class NimPosition {
 public:
  NimPosition() = default;
  // Throws OutOfRange for heaps outside 1..9.
  explicit NimPosition(std::span<const unsigned> heaps);
  NimPosition(std::initializer_list<unsigned> heaps)
      : NimPosition(std::span<const unsigned>(heaps.begin(), heaps.size())) {}

  // Comma-separated heap sizes, e.g. "1,1,2,5". Zero heaps are dropped.
  static NimPosition parse(std::string_view text);

  // Ascending.
  std::span<const unsigned> heaps() const { return heaps_; }
  bool empty() const { return heaps_.empty(); }

  bool operator==(const NimPosition&) const = default;

 private:
  std::vector<unsigned> heaps_;
};

struct ReducedForm {
  enum class Kind { Zero, Ones, OnesTwo, Three, TwoTwo };

  Kind kind = Kind::Zero;
  // Number of 1-heaps for Ones (>= 1) and OnesTwo (>= 0).
  std::size_t ones = 0;

  bool operator==(const ReducedForm&) const = default;

  // "0", "111", "112", "3", "22".
  std::string notation() const;
  NimPosition position() const;
};

GameId to_game(GameStore& store, const NimPosition& p);

ReducedForm reduce_nim(const NimPosition& p);

GameType nim_type(const NimPosition& p);
GameType reduced_type(const ReducedForm& form);

// cell[m][n] = type of 1^m (+ 2 when with_two) + 2_n, for m <= max_m, n <= max_n.
std::vector<std::vector<GameType>> nim_signature_table(Context& ctx, std::size_t max_m, std::size_t max_n,
                                                       bool with_two);

}  // namespace tricgt
