#include "tricgt/game_store.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tricgt {

namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

std::size_t GameStore::OptionsHash::operator()(std::span<const GameId> options) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ options.size();
  for (GameId g : options) {
    h = mix(h + g.value);
  }
  return static_cast<std::size_t>(h);
}

bool GameStore::OptionsEqual::operator()(std::span<const GameId> a, GameId b) const {
  auto other = store->options(b);
  return std::equal(a.begin(), a.end(), other.begin(), other.end());
}

GameStore::GameStore()
    : offsets_{0}, index_(16, OptionsHash{this}, OptionsEqual{this}) {
  intern_sorted({});
}

GameId GameStore::intern(std::span<const GameId> options) {
  for (GameId g : options) {
    check(g);
  }
  if (std::is_sorted(options.begin(), options.end()) &&
      std::adjacent_find(options.begin(), options.end()) == options.end()) {
    return intern_sorted(options);
  }
  std::vector<GameId> sorted(options.begin(), options.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return intern_sorted(sorted);
}

GameId GameStore::intern_sorted(std::span<const GameId> options) {
  if (auto it = index_.find(options); it != index_.end()) {
    return *it;
  }
  GameId id{static_cast<std::uint32_t>(size())};
  const bool aliases_arena = !options.empty() && options.data() >= arena_.data() &&
                             options.data() < arena_.data() + arena_.size();
  if (aliases_arena) {
    const std::vector<GameId> copy(options.begin(), options.end());
    arena_.insert(arena_.end(), copy.begin(), copy.end());
  } else {
    arena_.insert(arena_.end(), options.begin(), options.end());
  }
  offsets_.push_back(static_cast<std::uint32_t>(arena_.size()));
  index_.insert(id);
  return id;
}

std::optional<GameId> GameStore::find(std::span<const GameId> sorted_options) const {
  if (auto it = index_.find(sorted_options); it != index_.end()) return *it;
  return std::nullopt;
}

GameId GameStore::nim_heap(unsigned n) {
  if (n > kMaxHeap) {
    throw OutOfRange("nim heap size " + std::to_string(n) + " exceeds " + std::to_string(kMaxHeap));
  }
  while (heaps_.size() <= n) {
    heaps_.push_back(intern_sorted(heaps_));
  }
  return heaps_[n];
}

GameId GameStore::sum(GameId a, GameId b) {
  check(a);
  check(b);
  if (a == kNullGame) return b;
  if (b == kNullGame) return a;
  if (b < a) std::swap(a, b);
  const std::uint64_t key = (std::uint64_t{a.value} << 32) | b.value;
  if (auto it = sums_.find(key); it != sums_.end()) {
    return it->second;
  }
  // The arena may reallocate while we recurse, so copy the option lists.
  const std::vector<GameId> a_opts(options(a).begin(), options(a).end());
  const std::vector<GameId> b_opts(options(b).begin(), options(b).end());
  std::vector<GameId> result;
  result.reserve(a_opts.size() + b_opts.size());
  for (GameId x : a_opts) result.push_back(sum(x, b));
  for (GameId y : b_opts) result.push_back(sum(a, y));
  GameId id = intern(result);
  sums_.emplace(key, id);
  return id;
}

GameId GameStore::nest(GameId g, std::size_t layers) {
  check(g);
  for (std::size_t i = 0; i < layers; ++i) {
    g = intern_sorted(std::span<const GameId>(&g, 1));
  }
  return g;
}

GameId GameStore::multiple(GameId g, std::size_t copies) {
  check(g);
  GameId acc = kNullGame;
  for (std::size_t i = 0; i < copies; ++i) {
    acc = sum(acc, g);
  }
  return acc;
}

std::vector<GameId> GameStore::subgames(GameId g) const {
  check(g);
  // Every subgame of g has an id <= g, so a flat mark array suffices.
  std::vector<char> seen(g.value + 1, 0);
  seen[g.value] = 1;
  std::vector<GameId> out;
  for (std::uint32_t v = g.value + 1; v-- > 0;) {
    if (!seen[v]) continue;
    out.push_back(GameId{v});
    for (GameId o : options(GameId{v})) seen[o.value] = 1;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

GameStats GameStore::describe(GameId g) const {
  const auto closure = subgames(g);
  std::unordered_map<std::uint32_t, std::size_t> height;
  height.reserve(closure.size());
  for (GameId x : closure) {
    std::size_t h = 0;
    for (GameId o : options(x)) h = std::max(h, height.at(o.value) + 1);
    height.emplace(x.value, h);
  }
  return {options(g).size(), height.at(g.value), closure.size()};
}

void GameStore::dump(std::ostream& out) const {
  for (std::uint32_t v = 0; v < size(); ++v) {
    out << v << ':';
    for (GameId o : options(GameId{v})) out << ' ' << o.value;
    out << '\n';
  }
}

void GameStore::validate() const {
  for (std::uint32_t v = 0; v < size(); ++v) {
    auto opts = options(GameId{v});
    for (std::size_t i = 0; i < opts.size(); ++i) {
      if (opts[i].value >= v) {
        throw std::logic_error("node " + std::to_string(v) + " has option " +
                               std::to_string(opts[i].value) + " not below it");
      }
      if (i > 0 && !(opts[i - 1] < opts[i])) {
        throw std::logic_error("node " + std::to_string(v) + " options not strictly ascending");
      }
    }
    if (opts.empty() && v != 0) {
      throw std::logic_error("second null game at " + std::to_string(v));
    }
    auto it = index_.find(opts);
    if (it == index_.end() || it->value != v) {
      throw std::logic_error("node " + std::to_string(v) + " missing from intern index");
    }
  }
  if (index_.size() != size()) {
    throw std::logic_error("intern index size mismatch");
  }
}

}  // namespace tricgt
