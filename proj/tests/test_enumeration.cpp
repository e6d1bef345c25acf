#include <doctest.h>

#include <algorithm>

#include "tricgt/context.hpp"
#include "tricgt/enumeration.hpp"
#include "tricgt/notation.hpp"

using namespace tricgt;

namespace {

Census oracle_census(const GameStore& store, std::span<const GameId> games) {
  CoalitionOracle oracle(store);
  Census c;
  for (GameId g : games) {
    const auto seat = oracle.winner(g);
    GameType t = GameType::TInf;
    if (seat == Seat::Next) t = GameType::T1;
    if (seat == Seat::Other) t = GameType::T2;
    if (seat == Seat::Previous) t = GameType::T0;
    ++c.counts[index_of(t)];
  }
  return c;
}

Census make_census(std::size_t p, std::size_t n, std::size_t o, std::size_t q) {
  Census c;
  c.counts = {p, n, o, q};
  return c;
}

}  // namespace

TEST_CASE("universe sizes") {
  GameStore s;
  const std::size_t sizes[] = {1, 2, 4, 16, 65536};
  for (std::size_t d = 0; d <= 4; ++d) {
    CHECK(universe_size(d) == sizes[d]);
    const auto u = universe(s, d);
    CHECK(u.size() == sizes[d]);
    CHECK(u.day == d);
    CHECK(std::is_sorted(u.members.begin(), u.members.end()));
    CHECK(option_closed(s, u.members));
    for (GameId g : u.members) REQUIRE(s.birthday(g) <= d);
  }
  CHECK_THROWS_AS(universe(s, 5), CapacityError);
}

TEST_CASE("day-2 universe") {
  GameStore s;
  const auto u = universe(s, 2);
  const std::vector<GameId> want{kNullGame, s.nim_heap(1), s.nim_heap(2), s.intern({s.nim_heap(1)})};
  auto sorted = want;
  std::sort(sorted.begin(), sorted.end());
  CHECK(u.members == sorted);
  CHECK(u.contains(s.nim_heap(2)));
  CHECK_FALSE(u.contains(s.nim_heap(3)));
}

TEST_CASE("day-3 ids are reproducible") {
  GameStore s;
  const auto u = universe(s, 3);
  const char* want[] = {"0",         "1",     "2",       "{1}",       "3",     "{0,1,2,{1}}", "{0,1,{1}}", "{0,2}",
                        "{0,2,{1}}", "{0,{1}}", "{1,2}", "{1,2,{1}}", "{1,{1}}", "{2}",         "{2,{1}}",   "{{1}}"};
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(u.members[i] == GameId{static_cast<std::uint32_t>(i)});
    CHECK(render(s, u.members[i]) == want[i]);
  }
}

TEST_CASE("censuses") {
  Context ctx;
  CHECK(census(ctx.classifier, universe(ctx.store, 0).members) == make_census(1, 0, 0, 0));
  CHECK(census(ctx.classifier, universe(ctx.store, 2).members) == make_census(1, 2, 1, 0));

  // Goldens below were produced by the coalition oracle.
  const auto u3 = universe(ctx.store, 3).members;
  CHECK(oracle_census(ctx.store, u3) == make_census(2, 8, 3, 3));
  CHECK(census(ctx.classifier, u3) == make_census(2, 8, 3, 3));

  const auto u4 = universe(ctx.store, 4).members;
  const auto c4 = census(ctx.classifier, u4);
  CHECK(c4 == make_census(8, 49152, 255, 16121));
  CHECK(c4.total() == 65536);
  CHECK(c4[GameType::T2] == 255);
}

TEST_CASE("oracle census at day 4") {
  GameStore s;
  const auto u4 = universe(s, 4).members;
  CHECK(oracle_census(s, u4) == make_census(8, 49152, 255, 16121));
}

TEST_CASE("sampler") {
  GameStore s;
  CHECK(sample_games(s, 1, 0, 3, 9) == std::vector<GameId>{kNullGame});

  const auto a = sample_games(s, 500, 5, 4, 42);
  const auto b = sample_games(s, 500, 5, 4, 42);
  CHECK(a == b);
  CHECK(a.size() == 500);
  std::size_t max_day = 0;
  for (GameId g : a) {
    const auto stats = s.describe(g);
    REQUIRE(stats.birthday <= 5);
    REQUIRE(stats.option_count <= 4);
    max_day = std::max(max_day, stats.birthday);
  }
  CHECK(max_day == 5);

  GameStore fresh;
  const auto c = sample_games(fresh, 500, 5, 4, 42);
  CHECK(c == a);  // equal stores, equal ids
  CHECK(sample_games(s, 500, 5, 4, 43) != a);
}

TEST_CASE("option closure") {
  GameStore s;
  const GameId one = s.nim_heap(1);
  const GameId only_one[] = {one};
  CHECK_FALSE(option_closed(s, only_one));
  const GameId with_zero[] = {kNullGame, one};
  CHECK(option_closed(s, with_zero));
}
