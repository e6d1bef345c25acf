#include "tricgt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>

#include "tricgt/algebra.hpp"
#include "tricgt/enumeration.hpp"
#include "tricgt/nim.hpp"
#include "tricgt/notation.hpp"
#include "tricgt/reference.hpp"
#include "tricgt/sum_scanner.hpp"

namespace tricgt {

namespace {

constexpr GameType P = GameType::T0;
constexpr GameType N = GameType::T1;
constexpr GameType O = GameType::T2;
constexpr GameType Q = GameType::TInf;

// Collects failures; the first few end up in the detail line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < 5) failures_.push_back(what);
  }

  std::size_t checked() const { return checked_; }
  bool ok() const { return failed_ == 0; }

  CheckResult result(std::string summary) const {
    CheckResult r;
    r.passed = ok();
    if (!ok()) {
      summary += "; " + std::to_string(failed_) + " failed:";
      for (const auto& f : failures_) summary += " [" + f + "]";
    }
    r.detail = std::move(summary);
    return r;
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

ScanOptions scan_options(const VerifyOptions& opts) { return {opts.threads, 64}; }

GameType type_of(Context& ctx, std::string_view text) { return ctx.classify(parse(ctx.store, text)); }

std::string show(Context& ctx, GameId g) { return render(ctx.store, g); }

std::vector<GameId> pool_with_witnesses(Context& ctx) {
  auto pool = universe(ctx.store, 3).members;
  const auto witnesses = known_witness_games(ctx.store);
  pool.insert(pool.end(), witnesses.begin(), witnesses.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

std::string table_diff(const TypeTable& got, const TypeTable& want) {
  std::string out;
  for (GameType r : kAllTypes) {
    for (std::size_t c = 0; c < got.columns(); ++c) {
      const GameType col = kAllTypes[c];
      if (got.at(r, col) == want.at(r, col)) continue;
      out += std::string(type_letter(r)) + "," + std::string(type_letter(col)) + ": " +
             format_typeset(got.at(r, col)) + " vs " + format_typeset(want.at(r, col)) + " ";
    }
  }
  return out;
}

CheckResult check_classifications(Context& ctx, const VerifyOptions&) {
  Tally t;
  auto is = [&](std::string_view text, GameType want) {
    const GameType got = type_of(ctx, text);
    t.expect(got == want, std::string(text) + " is " + format_type(got));
  };
  is("0", P);
  is("1", N);
  is("11", O);
  is("111", P);
  {
    bool ok = true;
    for (std::size_t n = 0; n <= 9; ++n) {
      constexpr GameType by_residue[] = {P, N, O};
      ok = ok && ctx.classify(ctx.store.multiple(ctx.store.nim_heap(1), n)) == by_residue[n % 3];
    }
    t.expect(ok, "1^n by n mod 3");
  }
  is("2", N);
  is("3", N);
  {
    bool ok = true;
    for (unsigned n = 2; n <= 9; ++n) ok = ok && ctx.classify(ctx.store.nim_heap(n)) == N;
    t.expect(ok, "heaps 2..9 are N");
  }
  is("12", Q);
  is("112", N);
  is("1112", N);
  is("11112", Q);
  {
    bool ok = true;
    for (std::size_t n = 0; n <= 9; ++n) {
      constexpr GameType by_residue[] = {N, Q, N};
      const GameType got = ctx.classify(ctx.store.sum(ctx.store.multiple(ctx.store.nim_heap(1), n), ctx.store.nim_heap(2)));
      ok = ok && got == by_residue[n % 3];
    }
    t.expect(ok, "1^n 2 by n mod 3");
  }
  is("2+2", Q);
  is("{2}", O);
  is("{{2}}", P);
  is("{1,11}", Q);
  is("{2,11}", Q);
  return t.result(std::to_string(t.checked()) + " assertions");
}

CheckResult check_sum_examples(Context& ctx, const VerifyOptions&) {
  Tally t;
  const auto pool = pool_with_witnesses(ctx);
  std::size_t solved = 0;
  for (const auto& ex : known_sum_examples()) {
    const auto& eq = ex.equation;
    const GameId g = parse(ctx.store, ex.left);
    const GameId h = parse(ctx.store, ex.right);
    const GameType a = ctx.classify(g), b = ctx.classify(h), s = ctx.classify(ctx.store.sum(g, h));
    // Witnesses may list the summands in either order.
    t.expect(eq.matches(a, b, s),
             std::string(ex.left) + "+" + std::string(ex.right) + " gives " + std::string(type_letter(a)) + "+" +
                 std::string(type_letter(b)) + "=" + std::string(type_letter(s)));
    const auto found = solve_equation(ctx, eq.left, eq.right, eq.sum, pool);
    t.expect(found.has_value(), "no solution for " + eq.text());
    if (found) ++solved;
  }
  return t.result(std::to_string(known_sum_examples().size()) + " witnesses checked, " + std::to_string(solved) +
                  " equations solved over " + std::to_string(pool.size()) + " games");
}

CheckResult check_forbidden(Context& ctx, const VerifyOptions& opts) {
  const auto base = universe(ctx.store, 3);
  std::vector<GameId> extended;
  if (opts.full) extended = universe(ctx.store, 4).members;
  const auto report = scan_forbidden(ctx, base.members, extended, forbidden_equations(), scan_options(opts));
  Tally t;
  for (const auto& v : report.violations) {
    t.expect(false, show(ctx, v.left) + " + " + show(ctx, v.right) + " violates " + v.equation->text());
  }
  t.expect(report.pairs_checked == 136 + extended.size() * base.size(), "unexpected pair count");
  return t.result(std::to_string(report.pairs_checked) + " pairs, " + std::to_string(report.violations.size()) +
                  " violations");
}

CheckResult check_addition_subtraction(Context& ctx, const VerifyOptions& opts) {
  const auto base = universe(ctx.store, 3).members;
  const auto extra = known_witness_games(ctx.store);
  std::vector<GameId> extended;
  if (opts.full) extended = universe(ctx.store, 4).members;
  Tally t;
  const auto add = derive_type_table(ctx, TableKind::addition(), base, extra, extended, scan_options(opts));
  t.expect(add == known_addition_table(), "addition " + table_diff(add, known_addition_table()));
  const auto sub = derive_type_table(ctx, TableKind::subtraction(), base, extra, extended, scan_options(opts));
  t.expect(sub == known_subtraction_table(), "subtraction " + table_diff(sub, known_subtraction_table()));
  t.expect(sub.at(P, Q).empty(), "sum P with addend Q observed");
  std::size_t all_cells = 0;
  for (GameType r : kAllTypes) {
    for (GameType c : kAllTypes) all_cells += sub.at(r, c) == TypeSet::all();
  }
  // The whole Q row, plus sum N with addend N.
  t.expect(all_cells == 5 && sub.at(N, N) == TypeSet::all(),
           std::to_string(all_cells) + " subtraction cells hold all four types");
  for (GameType c : kAllTypes) t.expect(sub.at(Q, c) == TypeSet::all(), "Q row is not All");
  return t.result(std::string("32 cells compared") + (opts.full ? ", day-4 games included" : ""));
}

CheckResult check_multiples(Context& ctx, const VerifyOptions& opts) {
  const auto base = universe(ctx.store, 3).members;
  const auto extra = known_witness_games(ctx.store);
  std::vector<GameId> extended;
  if (opts.full) extended = universe(ctx.store, 4).members;
  Tally t;
  const auto dbl = derive_type_table(ctx, TableKind::doubling(), base, extra, extended, scan_options(opts));
  t.expect(dbl == known_doubling_table(), "doubling " + table_diff(dbl, known_doubling_table()));
  const auto tre = derive_type_table(ctx, TableKind::trebling(), base, extra, extended, scan_options(opts));
  t.expect(tre == known_trebling_table(), "trebling " + table_diff(tre, known_trebling_table()));
  t.expect(!dbl.at(N).contains(N), "some N game G has G+G ~ N");
  for (GameType r : kAllTypes) t.expect(!tre.at(r).contains(N), "some G+G+G ~ N");
  t.expect(!tre.at(Q).contains(O) && !tre.at(O).contains(O), "3G ~ O from an O or Q game");
  return t.result(opts.full ? "day-4 games and witnesses" : "day-3 games and witnesses");
}

CheckResult check_signatures(Context& ctx, const VerifyOptions&) {
  Tally t;
  for (bool with_two : {false, true}) {
    const auto grid = nim_signature_table(ctx, 5, 10, with_two);
    const auto& want = known_signature_table(with_two);
    for (std::size_t m = 0; m <= 5; ++m) {
      for (std::size_t n = 0; n <= 10; ++n) {
        t.expect(grid[m][n] == want[m][n], std::string(with_two ? "1^m 2" : "1^m") + " m=" + std::to_string(m) +
                                               " n=" + std::to_string(n) + " is " + format_type(grid[m][n]));
      }
    }
  }
  return t.result(std::to_string(t.checked()) + " cells");
}

CheckResult check_two_one(Context& ctx, const VerifyOptions& opts) {
  Tally t;
  const GameId two_one = parse(ctx.store, "{2}");
  const std::size_t day = opts.full ? 4 : 3;
  const auto u = universe(ctx.store, day);
  t.expect(ctx.classify(two_one) == O, "0 + {2} is not O");

  const auto below = universe(ctx.store, 3);
  const SumScanner scanner(ctx.store, below.members, 2);
  const auto slot = scanner.index_of(two_one);
  std::size_t absorbed = 0;
  for (GameId x : u.members) {
    if (x == kNullGame) continue;
    const GameType s = scanner.profile(x).with_base[*slot];
    t.expect(s == Q, show(ctx, x) + " + {2} is " + format_type(s));
    absorbed += s == Q;
  }

  // Battery-equivalence to 0 must single out 0 itself.
  const auto battery = default_battery(ctx.store);
  std::size_t equivalent = 0;
  for (GameId x : u.members) {
    if (!equivalent_up_to(ctx, x, kNullGame, battery).indistinguishable()) continue;
    ++equivalent;
    t.expect(x == kNullGame, show(ctx, x) + " is battery-equivalent to 0");
  }
  t.expect(equivalent == 1, "0 is not equivalent to itself");
  return t.result(std::to_string(absorbed) + " of " + std::to_string(u.size() - 1) + " nonzero day-" +
                  std::to_string(day) + " games absorbed; " + std::to_string(equivalent) + " equivalent to 0");
}

CheckResult check_oracle(Context& ctx, const VerifyOptions& opts) {
  Tally t;
  CoalitionOracle oracle(ctx.store);
  auto games = universe(ctx.store, opts.full ? 4 : 3).members;
  const auto samples = sample_games(ctx.store, 500, 5, 4, opts.seed);
  games.insert(games.end(), samples.begin(), samples.end());
  ctx.classifier.sync();
  for (GameId g : games) {
    const GameType type = ctx.classify(g);
    std::size_t winners = 0;
    for (Seat s : kAllSeats) winners += oracle.wins(g, s);
    t.expect(winners <= 1, show(ctx, g) + " has several winners");
    const auto seat = oracle.winner(g);
    GameType expected = Q;
    if (seat == Seat::Next) expected = N;
    if (seat == Seat::Other) expected = O;
    if (seat == Seat::Previous) expected = P;
    t.expect(type == expected, "id " + std::to_string(g.value) + " classifies " + format_type(type));
    if (type == N) {
      const auto move = ctx.classifier.winning_option(g);
      t.expect(move && ctx.classify(*move) == P, "winning option of id " + std::to_string(g.value));
    }
  }
  return t.result(std::to_string(games.size()) + " games, seed " + std::to_string(opts.seed));
}

NimPosition random_position(std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> count(0, 5), size(1, 9);
  std::vector<unsigned> heaps(count(rng));
  for (auto& h : heaps) h = size(rng);
  return NimPosition(heaps);
}

CheckResult check_nim(Context& ctx, const VerifyOptions& opts) {
  Tally t;
  std::mt19937_64 rng(opts.seed);
  const auto battery = default_battery(ctx.store);
  constexpr std::size_t kPositions = 1000;
  for (std::size_t i = 0; i < kPositions; ++i) {
    const auto p = random_position(rng);
    const GameId g = to_game(ctx.store, p);
    const auto form = reduce_nim(p);
    std::string label;
    for (unsigned h : p.heaps()) label += std::to_string(h);
    t.expect(nim_type(p) == ctx.classify(g), label + " closed form " + format_type(nim_type(p)));
    const GameId r = to_game(ctx.store, form.position());
    t.expect(equivalent_up_to(ctx, g, r, battery).indistinguishable(), label + " vs " + form.notation());
  }
  return t.result(std::to_string(kPositions) + " positions, seed " + std::to_string(opts.seed));
}

CheckResult check_roundtrip(Context& ctx, const VerifyOptions& opts) {
  Tally t;
  for (GameId g : universe(ctx.store, 3).members) t.expect(round_trips(ctx.store, g), show(ctx, g));
  // Quick mode leaves out texts too long to stream in seconds.
  constexpr std::uint64_t kQuickLimit = 100'000'000;
  std::size_t skipped = 0;
  for (auto text : sample_expressions()) {
    const GameId g = parse(ctx.store, text);
    if (!opts.full && rendered_length(ctx.store, g) > kQuickLimit) {
      ++skipped;
      continue;
    }
    t.expect(round_trips(ctx.store, g), std::string(text));
  }
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < 200; ++i) {
    const std::string text = random_expression(rng);
    t.expect(round_trips(ctx.store, parse(ctx.store, text)), text);
  }
  std::string summary = std::to_string(t.checked()) + " round trips";
  if (skipped) summary += ", " + std::to_string(skipped) + " long text left to full mode";
  return t.result(summary);
}

CheckResult check_corollary_chain(Context& ctx, const VerifyOptions&) {
  Tally t;
  const GameId three_ones = parse(ctx.store, "111");
  const GameId q = parse(ctx.store, "12");
  for (std::size_t k = 0; k <= 3; ++k) {
    const GameType s = ctx.classify(ctx.store.sum(ctx.store.multiple(three_ones, k), q));
    t.expect(s == Q, "k=" + std::to_string(k) + " gives " + format_type(s));
  }
  return t.result("P+...+P+Q for k=0..3");
}

CheckResult check_heap_claims(Context& ctx, const VerifyOptions&) {
  Tally t;
  auto& store = ctx.store;
  for (unsigned m = 2; m <= 9; ++m) {
    for (unsigned n = 2; n <= 9; ++n) {
      t.expect(ctx.classify(store.sum(store.nim_heap(m), store.nim_heap(n))) == Q,
               "heaps " + std::to_string(m) + "," + std::to_string(n));
    }
  }
  const GameId one = store.nim_heap(1);
  for (GameId g : universe(store, 3).members) {
    const std::string name = show(ctx, g);
    for (unsigned n = 2; n <= 9; ++n) {
      const GameType gn = ctx.classify(store.sum(g, store.nim_heap(n)));
      t.expect(gn != P, "(a) " + name + " n=" + std::to_string(n));
      if (n >= 3) t.expect(gn != O, "(b) " + name + " n=" + std::to_string(n));
      t.expect(ctx.classify(store.sum(store.sum(g, one), store.nim_heap(n))) != O,
               "(d) " + name + " n=" + std::to_string(n));
      for (unsigned m = 2; m <= 9; ++m) {
        if (ctx.classify(store.sum(g, store.nim_heap(m))) == N) t.expect(gn == N, "(c) " + name);
        t.expect(ctx.classify(store.sum(store.sum(g, store.nim_heap(m)), store.nim_heap(n))) == Q,
                 "(e)-(g) " + name + " m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  }
  return t.result(std::to_string(t.checked()) + " instances over day-3 games");
}

CheckResult check_heap_equivalences(Context& ctx, const VerifyOptions&) {
  Tally t;
  auto& store = ctx.store;
  const auto battery = default_battery(store);
  const GameId one = store.nim_heap(1);
  const GameId twotwo = parse(store, "22");
  for (unsigned n = 4; n <= 9; ++n) {
    t.expect(equivalent_up_to(ctx, store.nim_heap(3), store.nim_heap(n), battery).indistinguishable(),
             "(A) 3 vs " + std::to_string(n));
  }
  for (unsigned m = 3; m <= 9; ++m) {
    t.expect(equivalent_up_to(ctx, store.sum(one, store.nim_heap(2)), store.sum(one, store.nim_heap(m)), battery)
                 .indistinguishable(),
             "(B) 12 vs 1" + std::to_string(m));
  }
  for (GameId g : universe(store, 2).members) {
    for (unsigned m = 2; m <= 4; ++m) {
      for (unsigned n = m; n <= 4; ++n) {
        const GameId gmn = store.sum(store.sum(g, store.nim_heap(m)), store.nim_heap(n));
        t.expect(equivalent_up_to(ctx, gmn, twotwo, battery).indistinguishable(), "(C) " + show(ctx, gmn));
      }
    }
  }
  return t.result(std::to_string(t.checked()) + " pairs over a " + std::to_string(battery.size()) + "-game battery");
}

CheckResult check_reduced_forms(Context& ctx, const VerifyOptions&) {
  Tally t;
  using Kind = ReducedForm::Kind;
  std::vector<ReducedForm> forms{{Kind::Zero, 0}, {Kind::Three, 0}, {Kind::TwoTwo, 0}};
  for (std::size_t a = 1; a <= 6; ++a) forms.push_back({Kind::Ones, a});
  for (std::size_t a = 0; a <= 5; ++a) forms.push_back({Kind::OnesTwo, a});
  const auto battery = default_battery(ctx.store);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    t.expect(reduced_type(forms[i]) == ctx.classify(to_game(ctx.store, forms[i].position())),
             forms[i].notation() + " type");
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      const GameId a = to_game(ctx.store, forms[i].position());
      const GameId b = to_game(ctx.store, forms[j].position());
      t.expect(!equivalent_up_to(ctx, a, b, battery).indistinguishable(),
               forms[i].notation() + " vs " + forms[j].notation());
    }
  }
  return t.result(std::to_string(forms.size()) + " reduced forms pairwise distinguished");
}

CheckResult check_near_infinity(Context& ctx, const VerifyOptions& opts) {
  Tally t;
  const std::size_t day = opts.full ? 4 : 3;
  const auto u = universe(ctx.store, day);
  const auto found = near_infinity_search(ctx, u, O, scan_options(opts));
  const GameId two_one = parse(ctx.store, "{2}");
  t.expect(std::find(found.begin(), found.end(), two_one) != found.end(), "{2} not found");
  t.expect(near_infinity_search(ctx, universe(ctx.store, 2), P).empty(), "day-2 P candidate");
  return t.result(std::to_string(found.size()) + " O-type candidates at day " + std::to_string(day));
}

constexpr std::string_view kExpressions[] = {
    "{12}^3 4_5", "0", "1", "2", "3", "11", "111", "1111", "12", "112", "1112", "11112", "21", "22", "2+2",
    "1+1", "11+1", "12+11", "13", "{2}", "{{2}}", "{1,11}", "{2,11}", "{1,11}+{1,11}", "{0,11}", "{0,11}+2",
    "{0,11}+3", "112+1", "{2,11}+11", "1111+{{2}}", "{2}+111", "1_12", "1_1 2", "12^3", "{12}^3", "{12}",
    "1+1+2", "4_5", "2_1", "2_10", "111^3 12", "22+1", "3+1", "3+2_2",
};

// Order matters: criterion checks first, numbered 1..10.
const std::vector<CheckSpec>& checks() {
  static const std::vector<CheckSpec> list{
      {"classifications", "sample game types", 1, check_classifications},
      {"sum-examples", "witnessed sum equations", 2, check_sum_examples},
      {"forbidden-scan", "no impossible sum occurs", 3, check_forbidden},
      {"addition-subtraction", "addition and subtraction tables", 4, check_addition_subtraction},
      {"doubling-trebling", "doubling and trebling tables", 5, check_multiples},
      {"signature-tables", "signatures of 1^m and 1^m 2", 6, check_signatures},
      {"two-one-absorption", "X + {2} is Q for X nonzero", 7, check_two_one},
      {"oracle-agreement", "classifier agrees with coalition search", 8, check_oracle},
      {"nim-reduction", "Nim closed form and reduction", 9, check_nim},
      {"notation-roundtrip", "parse and render round trip", 10, check_roundtrip},
      {"corollary-chain", "P+...+P+Q stays Q", 0, check_corollary_chain},
      {"heap-claims", "heap sums and the gang-up claim", 0, check_heap_claims},
      {"heap-equivalences", "large heaps collapse", 0, check_heap_equivalences},
      {"reduced-forms", "reduced Nim forms are distinct", 0, check_reduced_forms},
      {"near-infinity", "{2} lies next to infinity", 0, check_near_infinity},
  };
  return list;
}

}  // namespace

std::span<const CheckSpec> verification_checks() { return checks(); }

std::span<const std::string_view> sample_expressions() { return kExpressions; }

CheckResult run_check(const CheckSpec& spec, Context& ctx, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  try {
    result = spec.run(ctx, opts);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("error: ") + e.what();
  }
  result.name = std::string(spec.name);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  Context ctx;
  std::vector<CheckResult> out;
  for (const auto& spec : verification_checks()) out.push_back(run_check(spec, ctx, opts));
  return out;
}

}  // namespace tricgt
