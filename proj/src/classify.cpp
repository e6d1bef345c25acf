#include "tricgt/classify.hpp"

#include <atomic>
#include <cctype>

namespace tricgt {

std::string_view type_letter(GameType t) {
  switch (t) {
    case GameType::T0:
      return "P";
    case GameType::T1:
      return "N";
    case GameType::T2:
      return "O";
    case GameType::TInf:
      return "Q";
  }
  return "?";
}

std::string_view type_symbol(GameType t) {
  switch (t) {
    case GameType::T0:
      return "0";
    case GameType::T1:
      return "1";
    case GameType::T2:
      return "2";
    case GameType::TInf:
      return "∞";
  }
  return "?";
}

std::string format_type(GameType t) {
  return std::string(type_letter(t)) + " (" + std::string(type_symbol(t)) + ")";
}

std::optional<GameType> parse_type(std::string_view text) {
  if (text == "∞") return GameType::TInf;
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "p" || lower == "0") return GameType::T0;
  if (lower == "n" || lower == "1") return GameType::T1;
  if (lower == "o" || lower == "2") return GameType::T2;
  if (lower == "q" || lower == "inf") return GameType::TInf;
  return std::nullopt;
}

std::string_view seat_name(Seat s) {
  switch (s) {
    case Seat::Next:
      return "Next";
    case Seat::Other:
      return "Other";
    case Seat::Previous:
      return "Previous";
  }
  return "?";
}

GameType type_from_options(std::span<const GameType> option_types) {
  TypeAccumulator acc;
  for (GameType t : option_types) acc.add(t);
  return acc.result();
}

void Classifier::sync() {
  if (memo_.size() < store_.size()) memo_.resize(store_.size(), 0);
}

GameType Classifier::classify(GameId g) {
  if (g.value >= memo_.size()) {
    if (!store_.contains(g)) throw InvalidReference("unknown game id " + std::to_string(g.value));
    sync();
  }
  return classify_synced(g);
}

GameType Classifier::classify_synced(GameId g) {
  std::atomic_ref<std::uint8_t> slot(memo_[g.value]);
  if (auto cached = slot.load(std::memory_order_relaxed)) {
    return static_cast<GameType>(cached - 1);
  }
  TypeAccumulator acc;
  for (GameId o : store_.options(g)) {
    acc.add(classify_synced(o));
    if (acc.decided()) break;
  }
  const GameType t = acc.result();
  slot.store(static_cast<std::uint8_t>(index_of(t) + 1), std::memory_order_relaxed);
  return t;
}

std::optional<GameId> Classifier::winning_option(GameId g) {
  if (classify(g) != GameType::T1) return std::nullopt;
  // Options are stored in ascending id order.
  for (GameId o : store_.options(g)) {
    if (classify(o) == GameType::T0) return o;
  }
  return std::nullopt;
}

bool CoalitionOracle::wins(GameId g, Seat s) {
  if (!store_.contains(g)) throw InvalidReference("unknown game id " + std::to_string(g.value));
  if (memo_.size() < store_.size()) memo_.resize(store_.size(), 0);

  const unsigned bit = 2u * static_cast<unsigned>(s);
  std::uint8_t& slot = memo_[g.value];
  if (slot & (1u << bit)) return (slot >> (bit + 1)) & 1u;

  const auto options = store_.options(g);
  bool result;
  if (options.empty()) {
    // Game over: whoever moved last (Previous) has won.
    result = s == Seat::Previous;
  } else if (s == Seat::Next) {
    // The mover picks one continuation, after which they are Previous.
    result = false;
    for (GameId o : options) {
      if (wins(o, after_move(s))) {
        result = true;
        break;
      }
    }
  } else {
    // The coalition picks the continuation; s must survive every one.
    result = true;
    for (GameId o : options) {
      if (!wins(o, after_move(s))) {
        result = false;
        break;
      }
    }
  }
  memo_[g.value] |= static_cast<std::uint8_t>((1u << bit) | (unsigned(result) << (bit + 1)));
  return result;
}

std::optional<Seat> CoalitionOracle::winner(GameId g) {
  for (Seat s : kAllSeats) {
    if (wins(g, s)) return s;
  }
  return std::nullopt;
}

}  // namespace tricgt
