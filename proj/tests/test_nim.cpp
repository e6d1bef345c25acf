#include <doctest.h>

#include <random>

#include "tricgt/algebra.hpp"
#include "tricgt/nim.hpp"
#include "tricgt/notation.hpp"

using namespace tricgt;

namespace {

constexpr GameType P = GameType::T0;
constexpr GameType N = GameType::T1;
constexpr GameType O = GameType::T2;
constexpr GameType Q = GameType::TInf;

using Kind = ReducedForm::Kind;

}  // namespace

TEST_CASE("positions") {
  const NimPosition a{2, 1, 2};
  CHECK(a == NimPosition{1, 2, 2});
  CHECK(std::vector<unsigned>(a.heaps().begin(), a.heaps().end()) == std::vector<unsigned>{1, 2, 2});
  CHECK(NimPosition{}.empty());
  CHECK_THROWS_AS(NimPosition{10}, OutOfRange);
  CHECK_THROWS_AS(NimPosition{0}, OutOfRange);
  CHECK(NimPosition::parse("1,1,2,5") == NimPosition{5, 2, 1, 1});
  CHECK(NimPosition::parse("0") == NimPosition{});
  CHECK(NimPosition::parse("3,0,1") == NimPosition{1, 3});
  CHECK_THROWS_AS(NimPosition::parse("1,,2"), ParseError);
  CHECK_THROWS_AS(NimPosition::parse("12"), OutOfRange);
}

TEST_CASE("to_game") {
  GameStore s;
  CHECK(to_game(s, NimPosition{}) == kNullGame);
  CHECK(to_game(s, NimPosition{1, 2}) == parse(s, "12"));
  CHECK(to_game(s, NimPosition{2, 2}) == parse(s, "22"));
}

TEST_CASE("reduction examples") {
  CHECK(reduce_nim(NimPosition{2, 2, 3}) == ReducedForm{Kind::TwoTwo, 0});
  CHECK(reduce_nim(NimPosition{1, 3}) == ReducedForm{Kind::OnesTwo, 1});
  CHECK(reduce_nim(NimPosition{5}) == ReducedForm{Kind::Three, 0});
  CHECK(reduce_nim(NimPosition{1, 1, 1}) == ReducedForm{Kind::Ones, 3});
  CHECK(reduce_nim(NimPosition{}) == ReducedForm{Kind::Zero, 0});
  CHECK(reduce_nim(NimPosition{1, 1, 2, 5}) == ReducedForm{Kind::TwoTwo, 0});
  CHECK(reduce_nim(NimPosition{2}) == ReducedForm{Kind::OnesTwo, 0});
  CHECK(ReducedForm{Kind::OnesTwo, 2}.notation() == "112");
  CHECK(ReducedForm{Kind::OnesTwo, 0}.position() == NimPosition{2});
  CHECK(ReducedForm{Kind::TwoTwo, 0}.position() == NimPosition{2, 2});
}

TEST_CASE("closed-form types") {
  Context ctx;
  CHECK(nim_type(NimPosition{1, 1, 1}) == P);
  CHECK(nim_type(NimPosition{1, 2}) == Q);
  CHECK(nim_type(NimPosition{4}) == N);
  CHECK(ctx.classify(to_game(ctx.store, NimPosition{2, 2})) == Q);
}

TEST_CASE("signature tables") {
  Context ctx;
  const auto ones = nim_signature_table(ctx, 5, 10, false);
  const auto ones_two = nim_signature_table(ctx, 5, 10, true);
  CHECK(ones[2][0] == N);
  CHECK(ones[4][0] == Q);
  CHECK(ones_two[0][2] == N);
  for (std::size_t m = 0; m <= 5; ++m) {
    for (std::size_t n = 0; n <= 10; ++n) {
      CHECK(ones[m][n] == known_signature_table(false)[m][n]);
      CHECK(ones_two[m][n] == known_signature_table(true)[m][n]);
    }
  }
}

TEST_CASE("closed form and reduction on random positions") {
  Context ctx;
  const auto battery = default_battery(ctx.store);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<unsigned> count(0, 5), size(1, 9);
  for (int i = 0; i < 1000; ++i) {
    std::vector<unsigned> heaps(count(rng));
    for (auto& h : heaps) h = size(rng);
    const NimPosition p(heaps);
    const GameId g = to_game(ctx.store, p);
    REQUIRE(nim_type(p) == ctx.classify(g));
    const GameId r = to_game(ctx.store, reduce_nim(p).position());
    REQUIRE(equivalent_up_to(ctx, g, r, battery).indistinguishable());
  }
}

TEST_CASE("any two players gang up on the third") {
  Context ctx;
  for (unsigned m = 2; m <= 9; ++m) {
    for (unsigned n = 2; n <= 9; ++n) CHECK(ctx.classify(to_game(ctx.store, NimPosition{m, n})) == Q);
  }
}

TEST_CASE("heap claims over day-3 games") {
  Context ctx;
  auto& s = ctx.store;
  const GameId one = s.nim_heap(1);
  for (GameId g : universe(s, 3).members) {
    for (unsigned n = 2; n <= 9; ++n) {
      const GameType gn = ctx.classify(s.sum(g, s.nim_heap(n)));
      CHECK(gn != P);
      if (n >= 3) CHECK(gn != O);
      CHECK(ctx.classify(s.sum(s.sum(g, one), s.nim_heap(n))) != O);
      for (unsigned m = 2; m <= 9; ++m) {
        if (ctx.classify(s.sum(g, s.nim_heap(m))) == N) CHECK(gn == N);
        CHECK(ctx.classify(s.sum(s.sum(g, s.nim_heap(m)), s.nim_heap(n))) == Q);
      }
    }
  }
}

TEST_CASE("large heaps collapse") {
  Context ctx;
  auto& s = ctx.store;
  const auto battery = default_battery(s);
  for (unsigned n = 4; n <= 9; ++n) {
    CHECK(equivalent_up_to(ctx, s.nim_heap(3), s.nim_heap(n), battery).indistinguishable());
    CHECK(equivalent_up_to(ctx, parse(s, "12"), to_game(s, NimPosition{1, n}), battery).indistinguishable());
  }
}

TEST_CASE("reduced forms are pairwise distinct") {
  Context ctx;
  const auto battery = default_battery(ctx.store);
  std::vector<ReducedForm> forms{{Kind::Zero, 0}, {Kind::Three, 0}, {Kind::TwoTwo, 0}};
  for (std::size_t a = 1; a <= 6; ++a) forms.push_back({Kind::Ones, a});
  for (std::size_t a = 0; a <= 5; ++a) forms.push_back({Kind::OnesTwo, a});
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const GameId a = to_game(ctx.store, forms[i].position());
    CHECK(reduced_type(forms[i]) == ctx.classify(a));
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      CAPTURE(forms[i].notation());
      CAPTURE(forms[j].notation());
      CHECK_FALSE(equivalent_up_to(ctx, a, to_game(ctx.store, forms[j].position()), battery).indistinguishable());
    }
  }
  // The separating sums named alongside the table.
  CHECK(ctx.classify(parse(ctx.store, "22+1")) == Q);
  CHECK(ctx.classify(parse(ctx.store, "3+1")) == Q);
  CHECK(ctx.classify(parse(ctx.store, "3+2_2")) == N);
  CHECK(ctx.classify(parse(ctx.store, "{0,11}+2")) == O);
}
