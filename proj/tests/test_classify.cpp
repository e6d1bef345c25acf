#include <doctest.h>

#include <random>
#include <thread>

#include "tricgt/context.hpp"
#include "tricgt/enumeration.hpp"
#include "tricgt/notation.hpp"

using namespace tricgt;

namespace {

constexpr GameType P = GameType::T0;
constexpr GameType N = GameType::T1;
constexpr GameType O = GameType::T2;
constexpr GameType Q = GameType::TInf;

GameType type_of(Context& ctx, std::string_view text) { return ctx.classify(parse(ctx.store, text)); }

// Oracle answer translated into a type.
GameType oracle_type(CoalitionOracle& oracle, GameId g) {
  const bool next = oracle.wins(g, Seat::Next);
  const bool other = oracle.wins(g, Seat::Other);
  const bool previous = oracle.wins(g, Seat::Previous);
  REQUIRE(next + other + previous <= 1);
  if (next) return N;
  if (other) return O;
  if (previous) return P;
  return Q;
}

void check_agreement(Context& ctx, std::span<const GameId> games) {
  CoalitionOracle oracle(ctx.store);
  for (GameId g : games) {
    const GameType t = ctx.classify(g);
    REQUIRE(t == oracle_type(oracle, g));
    if (t == N) {
      const auto move = ctx.classifier.winning_option(g);
      REQUIRE(move.has_value());
      CHECK(ctx.classify(*move) == P);
    } else {
      CHECK_FALSE(ctx.classifier.winning_option(g).has_value());
    }
  }
}

}  // namespace

TEST_CASE("type names") {
  CHECK(type_letter(P) == "P");
  CHECK(type_letter(Q) == "Q");
  CHECK(type_symbol(O) == "2");
  CHECK(type_symbol(Q) == "∞");
  CHECK(format_type(Q) == "Q (∞)");
  CHECK(format_type(N) == "N (1)");
  CHECK(parse_type("p") == P);
  CHECK(parse_type("N") == N);
  CHECK(parse_type("2") == O);
  CHECK(parse_type("0") == P);
  CHECK(parse_type("inf") == Q);
  CHECK(parse_type("∞") == Q);
  CHECK_FALSE(parse_type("3").has_value());
  CHECK_FALSE(parse_type("").has_value());
}

TEST_CASE("seat rotation") {
  CHECK(after_move(Seat::Next) == Seat::Previous);
  CHECK(after_move(Seat::Other) == Seat::Next);
  CHECK(after_move(Seat::Previous) == Seat::Other);
  for (Seat s : kAllSeats) CHECK(after_move(after_move(after_move(s))) == s);
}

TEST_CASE("rules on option types") {
  CHECK(type_from_options({}) == P);
  const GameType only_n[] = {N, N};
  CHECK(type_from_options(only_n) == O);
  const GameType only_o[] = {O};
  CHECK(type_from_options(only_o) == P);
  const GameType with_p[] = {Q, O, P};
  CHECK(type_from_options(with_p) == N);
  const GameType mixed[] = {N, O};
  CHECK(type_from_options(mixed) == Q);
  const GameType with_q[] = {Q};
  CHECK(type_from_options(with_q) == Q);
}

TEST_CASE("classify examples") {
  Context ctx;
  CHECK(type_of(ctx, "0") == P);
  CHECK(type_of(ctx, "12") == Q);
  CHECK(type_of(ctx, "{2,11}") == Q);
  CHECK(type_of(ctx, "22") == Q);
  CHECK(type_of(ctx, "{1,11}") == Q);
  CHECK(type_of(ctx, "{2}") == O);
  CHECK(type_of(ctx, "{{2}}") == P);
}

TEST_CASE("coalition oracle examples") {
  Context ctx;
  CoalitionOracle oracle(ctx.store);
  CHECK(oracle.wins(kNullGame, Seat::Previous));
  CHECK_FALSE(oracle.wins(kNullGame, Seat::Next));
  CHECK(oracle.wins(parse(ctx.store, "1"), Seat::Next));
  const GameId twelve = parse(ctx.store, "12");
  for (Seat s : kAllSeats) CHECK_FALSE(oracle.wins(twelve, s));
  CHECK_FALSE(oracle.winner(twelve).has_value());
  CHECK(oracle.winner(parse(ctx.store, "11")) == Seat::Other);
}

TEST_CASE("winning option examples") {
  Context ctx;
  CHECK(ctx.classifier.winning_option(parse(ctx.store, "2")) == kNullGame);
  CHECK(ctx.classifier.winning_option(parse(ctx.store, "112")) == parse(ctx.store, "111"));
  CHECK_FALSE(ctx.classifier.winning_option(parse(ctx.store, "11")).has_value());
}

TEST_CASE("periodicities of 1^n and 1^n 2") {
  Context ctx;
  const GameId one = ctx.store.nim_heap(1), two = ctx.store.nim_heap(2);
  for (std::size_t n = 0; n <= 9; ++n) {
    constexpr GameType ones[] = {P, N, O};
    constexpr GameType ones_two[] = {N, Q, N};
    CHECK(ctx.classify(ctx.store.multiple(one, n)) == ones[n % 3]);
    CHECK(ctx.classify(ctx.store.sum(ctx.store.multiple(one, n), two)) == ones_two[n % 3]);
  }
}

TEST_CASE("classifier agrees with the oracle on day-3 games") {
  Context ctx;
  const auto u = universe(ctx.store, 3).members;
  check_agreement(ctx, u);
}

TEST_CASE("classifier agrees with the oracle on random day-4 games") {
  Context ctx;
  const auto u3 = universe(ctx.store, 3).members;
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<unsigned> mask(0, 0xFFFF);
  std::vector<GameId> games;
  for (int i = 0; i < 500; ++i) {
    const unsigned m = mask(rng);
    std::vector<GameId> options;
    for (unsigned b = 0; b < 16; ++b) {
      if (m >> b & 1) options.push_back(u3[b]);
    }
    games.push_back(ctx.store.intern(options));
  }
  check_agreement(ctx, games);
}

TEST_CASE("classifier agrees with the oracle on sampled deep games") {
  Context ctx;
  const auto games = sample_games(ctx.store, 500, 5, 4, 42);
  check_agreement(ctx, games);
}

TEST_CASE("concurrent classification matches sequential") {
  Context ctx;
  const auto u = universe(ctx.store, 4).members;
  Classifier sequential(ctx.store);
  std::vector<GameType> want;
  for (GameId g : u) want.push_back(sequential.classify(g));

  Classifier shared(ctx.store);
  shared.sync();
  std::vector<GameType> got(u.size());
  std::vector<std::jthread> workers;
  for (std::size_t w = 0; w < 4; ++w) {
    // Interleaved ranges so workers race on shared subgames.
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < u.size(); i += 4) got[i] = shared.classify(u[i]);
    });
  }
  workers.clear();
  CHECK(got == want);
}
