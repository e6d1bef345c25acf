#include "tricgt/nim.hpp"

#include <algorithm>
#include <charconv>

#include "tricgt/notation.hpp"

namespace tricgt {

NimPosition::NimPosition(std::span<const unsigned> heaps) : heaps_(heaps.begin(), heaps.end()) {
  for (unsigned h : heaps_) {
    if (h < 1 || h > GameStore::kMaxHeap) {
      throw OutOfRange("nim heap " + std::to_string(h) + " outside 1.." + std::to_string(GameStore::kMaxHeap));
    }
  }
  std::sort(heaps_.begin(), heaps_.end());
}

NimPosition NimPosition::parse(std::string_view text) {
  std::vector<unsigned> heaps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    auto field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    unsigned h = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), h);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw ParseError("expected a heap size", pos);
    }
    if (h != 0) heaps.push_back(h);
    pos = comma + 1;
  }
  return NimPosition(heaps);
}

std::string ReducedForm::notation() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::Ones:
      return std::string(ones, '1');
    case Kind::OnesTwo:
      return std::string(ones, '1') + "2";
    case Kind::Three:
      return "3";
    case Kind::TwoTwo:
      return "22";
  }
  return "?";
}

NimPosition ReducedForm::position() const {
  std::vector<unsigned> heaps;
  switch (kind) {
    case Kind::Zero:
      break;
    case Kind::Ones:
      heaps.assign(ones, 1);
      break;
    case Kind::OnesTwo:
      heaps.assign(ones, 1);
      heaps.push_back(2);
      break;
    case Kind::Three:
      heaps = {3};
      break;
    case Kind::TwoTwo:
      heaps = {2, 2};
      break;
  }
  return NimPosition(heaps);
}

GameId to_game(GameStore& store, const NimPosition& p) {
  GameId acc = kNullGame;
  for (unsigned h : p.heaps()) acc = store.sum(acc, store.nim_heap(h));
  return acc;
}

ReducedForm reduce_nim(const NimPosition& p) {
  // Heaps above 3 behave exactly like 3.
  std::size_t ones = 0, twos = 0, threes = 0;
  for (unsigned h : p.heaps()) {
    if (h == 1) {
      ++ones;
    } else if (h == 2) {
      ++twos;
    } else {
      ++threes;
    }
  }
  using Kind = ReducedForm::Kind;
  if (twos + threes >= 2) return {Kind::TwoTwo, 0};
  if (twos == 1) return {Kind::OnesTwo, ones};
  if (threes == 1) return ones >= 1 ? ReducedForm{Kind::OnesTwo, ones} : ReducedForm{Kind::Three, 0};
  if (ones == 0) return {Kind::Zero, 0};
  return {Kind::Ones, ones};
}

GameType reduced_type(const ReducedForm& form) {
  using Kind = ReducedForm::Kind;
  switch (form.kind) {
    case Kind::Zero:
      return GameType::T0;
    case Kind::Ones: {
      constexpr GameType by_residue[] = {GameType::T0, GameType::T1, GameType::T2};
      return by_residue[form.ones % 3];
    }
    case Kind::OnesTwo: {
      constexpr GameType by_residue[] = {GameType::T1, GameType::TInf, GameType::T1};
      return by_residue[form.ones % 3];
    }
    case Kind::Three:
      return GameType::T1;
    case Kind::TwoTwo:
      return GameType::TInf;
  }
  return GameType::TInf;
}

GameType nim_type(const NimPosition& p) { return reduced_type(reduce_nim(p)); }

std::vector<std::vector<GameType>> nim_signature_table(Context& ctx, std::size_t max_m, std::size_t max_n,
                                                       bool with_two) {
  auto& store = ctx.store;
  const GameId one = store.nim_heap(1);
  const GameId two = store.nim_heap(2);
  std::vector<std::vector<GameType>> grid(max_m + 1);
  for (std::size_t m = 0; m <= max_m; ++m) {
    GameId row = store.multiple(one, m);
    if (with_two) row = store.sum(row, two);
    for (std::size_t n = 0; n <= max_n; ++n) grid[m].push_back(ctx.classify(store.sum(row, store.nest(two, n))));
  }
  return grid;
}

}  // namespace tricgt
