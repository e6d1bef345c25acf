#include "tricgt/sum_scanner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tricgt {

namespace {

constexpr std::size_t kMaxTupleEntries = std::size_t{1} << 24;

}  // namespace

SumScanner::SumScanner(const GameStore& store, std::span<const GameId> base, std::size_t order)
    : store_(store), base_(base.begin(), base.end()), order_(order) {
  if (order_ < 2) throw std::invalid_argument("scanner order must be at least 2");
  std::sort(base_.begin(), base_.end());
  base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
  if (base_.empty() || base_.front() != kNullGame) {
    throw std::invalid_argument("scanner base must contain the null game");
  }
  const std::size_t n = base_.size();
  for (std::uint32_t i = 0; i < n; ++i) index_.emplace(base_[i], i);
  base_options_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (GameId o : store_.options(base_[i])) {
      auto it = index_.find(o);
      if (it == index_.end()) {
        throw std::invalid_argument("scanner base is not closed under options (game " +
                                    std::to_string(base_[i].value) + ")");
      }
      base_options_[i].push_back(it->second);
    }
  }

  powers_.assign(order_ + 1, 1);
  for (std::size_t j = 1; j <= order_; ++j) {
    if (powers_[j - 1] > kMaxTupleEntries / n) {
      throw CapacityError("scanner tables for " + std::to_string(n) + " base games at order " +
                          std::to_string(order_) + " are too large");
    }
    powers_[j] = powers_[j - 1] * n;
  }

  tuples_.resize(powers_[order_]);
  std::vector<std::uint32_t> digits(order_, 0);
  for (std::size_t idx = 0; idx < tuples_.size(); ++idx) {
    TypeAccumulator acc;
    for (std::size_t j = 0; j < order_ && !acc.decided(); ++j) {
      const std::size_t without = idx - digits[j] * powers_[j];
      for (std::uint32_t o : base_options_[digits[j]]) {
        acc.add(tuples_[without + o * powers_[j]]);
        if (acc.decided()) break;
      }
    }
    tuples_[idx] = acc.result();
    // Advance the little-endian digit counter.
    for (std::size_t j = 0; j < order_ && ++digits[j] == n; ++j) digits[j] = 0;
  }
}

std::optional<std::uint32_t> SumScanner::index_of(GameId g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SumScanner::covers(GameId g) const {
  for (GameId o : store_.options(g)) {
    if (!index_.contains(o)) return false;
  }
  return true;
}

GameType SumScanner::base_sum_type(std::span<const std::uint32_t> indices) const {
  if (indices.size() > order_) throw std::invalid_argument("too many summands for scanner order");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= base_.size()) throw std::out_of_range("base index out of range");
    idx += indices[j] * powers_[j];
  }
  return tuples_[idx];
}

SumScanner::Profile SumScanner::profile(GameId g) const {
  Profile p;
  p.game = g;
  for (GameId o : store_.options(g)) {
    auto idx = index_of(o);
    if (!idx) throw std::invalid_argument("game " + std::to_string(g.value) + " is not covered by the base");
    p.option_indices.push_back(*idx);
  }

  const std::size_t n = base_.size();
  // levels[c] holds c copies of g plus (order - c) base summands.
  std::vector<std::vector<GameType>> levels(order_ + 1);
  for (std::size_t c = 1; c <= order_; ++c) {
    const std::size_t width = order_ - c;
    const std::vector<GameType>& lower = c == 1 ? tuples_ : levels[c - 1];
    auto& level = levels[c];
    level.resize(powers_[width]);
    std::vector<std::uint32_t> digits(width, 0);
    for (std::size_t idx = 0; idx < level.size(); ++idx) {
      TypeAccumulator acc;
      // One copy of g moves: it becomes an extra base summand.
      for (std::uint32_t o : p.option_indices) {
        acc.add(lower[idx + o * powers_[width]]);
        if (acc.decided()) break;
      }
      for (std::size_t j = 0; j < width && !acc.decided(); ++j) {
        const std::size_t without = idx - digits[j] * powers_[j];
        for (std::uint32_t o : base_options_[digits[j]]) {
          acc.add(level[without + o * powers_[j]]);
          if (acc.decided()) break;
        }
      }
      level[idx] = acc.result();
      for (std::size_t j = 0; j < width && ++digits[j] == n; ++j) digits[j] = 0;
    }
  }

  p.with_base.assign(levels[1].begin(), levels[1].begin() + static_cast<std::ptrdiff_t>(n));
  p.multiples.resize(order_ + 1);
  p.multiples[0] = GameType::T0;
  for (std::size_t c = 1; c <= order_; ++c) p.multiples[c] = levels[c][0];
  p.type = p.multiples[1];
  return p;
}

GameType SumScanner::pair_type(const Profile& a, const Profile& b) {
  TypeAccumulator acc;
  for (std::uint32_t o : a.option_indices) {
    acc.add(b.with_base[o]);
    if (acc.decided()) return acc.result();
  }
  for (std::uint32_t o : b.option_indices) {
    acc.add(a.with_base[o]);
    if (acc.decided()) return acc.result();
  }
  return acc.result();
}

}  // namespace tricgt
