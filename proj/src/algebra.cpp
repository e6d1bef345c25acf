#include "tricgt/algebra.hpp"

#include <algorithm>
#include <unordered_set>

#include "tricgt/notation.hpp"
#include "tricgt/parallel.hpp"
#include "tricgt/sum_scanner.hpp"

namespace tricgt {

namespace {

std::vector<GameId> sorted_unique(std::span<const GameId> a, std::span<const GameId> b = {}) {
  std::vector<GameId> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Splits `extended` into games a scanner over `base` can profile and the rest.
struct ExtendedPlan {
  std::optional<SumScanner> scanner;
  std::vector<GameId> covered;
  std::vector<GameId> uncovered;
  std::vector<GameType> base_types;  // aligned with scanner->base()
};

ExtendedPlan plan_extended(Context& ctx, std::span<const GameId> base, std::span<const GameId> extended,
                           std::size_t order) {
  ExtendedPlan plan;
  if (extended.empty()) return plan;
  const bool usable = std::find(base.begin(), base.end(), kNullGame) != base.end() &&
                      option_closed(ctx.store, base);
  if (usable) {
    plan.scanner.emplace(ctx.store, base, order);
    for (GameId g : plan.scanner->base()) plan.base_types.push_back(ctx.classify(g));
    for (GameId e : extended) (plan.scanner->covers(e) ? plan.covered : plan.uncovered).push_back(e);
  } else {
    plan.uncovered.assign(extended.begin(), extended.end());
  }
  return plan;
}

void record(TypeTable& table, GameType a, GameType b, GameType s) {
  if (table.kind().op == TableOp::Addition) {
    table.at(a, b).insert(s);
  } else {
    table.at(s, b).insert(a);
  }
}

const TypeEquation* find_equation(std::span<const TypeEquation> equations, GameType a, GameType b, GameType s) {
  for (const auto& eq : equations) {
    if (eq.matches(a, b, s)) return &eq;
  }
  return nullptr;
}

}  // namespace

std::vector<GameId> known_witness_games(GameStore& store) {
  std::vector<GameId> out;
  for (const auto& ex : known_sum_examples()) {
    out.push_back(parse(store, ex.left));
    out.push_back(parse(store, ex.right));
  }
  return sorted_unique(out);
}

TypeTable derive_type_table(Context& ctx, TableKind kind, std::span<const GameId> base,
                            std::span<const GameId> extra, std::span<const GameId> extended,
                            const ScanOptions& opts) {
  if (base.empty()) throw UsageError("type table needs a non-empty base");
  if (kind.op == TableOp::Multiple && kind.copies < 2) throw UsageError("multiple tables need at least 2 copies");

  const auto pool = sorted_unique(base, extra);
  TypeTable table(kind);

  if (kind.op == TableOp::Multiple) {
    for (GameId g : pool) table.at(ctx.classify(g)).insert(ctx.classify(ctx.store.multiple(g, kind.copies)));
    auto plan = plan_extended(ctx, base, extended, kind.copies);
    for (GameId e : plan.uncovered) {
      table.at(ctx.classify(e)).insert(ctx.classify(ctx.store.multiple(e, kind.copies)));
    }
    if (plan.covered.empty()) return table;
    const auto bounds = chunk_bounds(plan.covered.size(), opts.chunks);
    std::vector<TypeTable> partial(bounds.size() - 1, TypeTable(kind));
    parallel_chunks(plan.covered.size(), opts.chunks, opts.threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        const auto p = plan.scanner->profile(plan.covered[i]);
        partial[c].at(p.type).insert(p.multiples[kind.copies]);
      }
    });
    for (const auto& t : partial) table |= t;
    return table;
  }

  for (GameId g : pool) {
    for (GameId h : pool) record(table, ctx.classify(g), ctx.classify(h), ctx.classify(ctx.store.sum(g, h)));
  }
  auto plan = plan_extended(ctx, base, extended, 2);
  for (GameId e : plan.uncovered) {
    for (GameId b : base) {
      const GameType s = ctx.classify(ctx.store.sum(e, b));
      record(table, ctx.classify(e), ctx.classify(b), s);
      record(table, ctx.classify(b), ctx.classify(e), s);
    }
  }
  if (plan.covered.empty()) return table;
  const auto bounds = chunk_bounds(plan.covered.size(), opts.chunks);
  std::vector<TypeTable> partial(bounds.size() - 1, TypeTable(kind));
  parallel_chunks(plan.covered.size(), opts.chunks, opts.threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto p = plan.scanner->profile(plan.covered[i]);
      for (std::size_t j = 0; j < plan.base_types.size(); ++j) {
        record(partial[c], p.type, plan.base_types[j], p.with_base[j]);
        record(partial[c], plan.base_types[j], p.type, p.with_base[j]);
      }
    }
  });
  for (const auto& t : partial) table |= t;
  return table;
}

std::optional<std::pair<GameId, GameId>> solve_equation(Context& ctx, GameType left, GameType right,
                                                        GameType sum, std::span<const GameId> games) {
  const auto pool = sorted_unique(games);
  for (GameId g : pool) {
    if (ctx.classify(g) != left) continue;
    for (GameId h : pool) {
      if (ctx.classify(h) != right) continue;
      if (ctx.classify(ctx.store.sum(g, h)) == sum) return std::pair{g, h};
    }
  }
  return std::nullopt;
}

ScanReport scan_forbidden(Context& ctx, std::span<const GameId> base, std::span<const GameId> extended,
                          std::span<const TypeEquation> equations, const ScanOptions& opts) {
  ScanReport report;
  auto check = [&](std::vector<Violation>& out, GameId g, GameId h, GameType a, GameType b, GameType s) {
    if (const auto* eq = find_equation(equations, a, b, s)) out.push_back({g, h, a, b, s, eq});
  };

  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      const GameId g = base[i], h = base[j];
      check(report.violations, g, h, ctx.classify(g), ctx.classify(h), ctx.classify(ctx.store.sum(g, h)));
      ++report.pairs_checked;
    }
  }

  auto plan = plan_extended(ctx, base, extended, 2);
  for (GameId e : plan.uncovered) {
    for (GameId b : base) {
      check(report.violations, e, b, ctx.classify(e), ctx.classify(b), ctx.classify(ctx.store.sum(e, b)));
      ++report.pairs_checked;
    }
  }
  if (plan.covered.empty()) return report;

  const auto bounds = chunk_bounds(plan.covered.size(), opts.chunks);
  std::vector<std::vector<Violation>> partial(bounds.size() - 1);
  parallel_chunks(plan.covered.size(), opts.chunks, opts.threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto p = plan.scanner->profile(plan.covered[i]);
      const auto scanned = plan.scanner->base();
      for (std::size_t j = 0; j < scanned.size(); ++j) {
        check(partial[c], p.game, scanned[j], p.type, plan.base_types[j], p.with_base[j]);
      }
    }
  });
  for (auto& v : partial) report.violations.insert(report.violations.end(), v.begin(), v.end());
  report.pairs_checked += plan.covered.size() * plan.scanner->base().size();
  return report;
}

EquivVerdict equivalent_up_to(Context& ctx, GameId g, GameId h, std::span<const GameId> battery) {
  if (battery.empty()) throw UsageError("equivalence battery is empty");
  EquivVerdict verdict;
  verdict.battery_size = battery.size();
  for (GameId x : battery) {
    const GameType tg = ctx.classify(ctx.store.sum(g, x));
    const GameType th = ctx.classify(ctx.store.sum(h, x));
    if (tg != th) {
      verdict.distinction = Distinction{x, tg, th};
      break;
    }
  }
  return verdict;
}

std::vector<GameId> default_battery(GameStore& store) {
  std::vector<GameId> out;
  std::unordered_set<GameId> seen;
  auto add = [&](GameId g) {
    if (seen.insert(g).second) out.push_back(g);
  };
  for (GameId g : universe(store, 3).members) add(g);
  const GameId one = store.nim_heap(1);
  const GameId two = store.nim_heap(2);
  for (std::size_t n = 0; n <= 10; ++n) add(store.nest(two, n));
  for (std::size_t m = 1; m <= 6; ++m) add(store.multiple(one, m));
  for (std::size_t m = 0; m <= 5; ++m) add(store.sum(store.multiple(one, m), two));
  add(store.intern({kNullGame, store.sum(one, one)}));
  add(store.sum(two, two));
  add(store.nim_heap(3));
  return out;
}

std::vector<GameId> default_signature_contexts(GameStore& store) {
  std::vector<GameId> out;
  const GameId two = store.nim_heap(2);
  for (std::size_t n = 0; n <= 10; ++n) out.push_back(store.nest(two, n));
  return out;
}

std::vector<GameType> signature(Context& ctx, GameId g, std::span<const GameId> contexts) {
  if (contexts.empty()) throw UsageError("signature needs at least one context");
  std::vector<GameType> out;
  out.reserve(contexts.size());
  for (GameId x : contexts) out.push_back(ctx.classify(ctx.store.sum(g, x)));
  return out;
}

bool infinity_absorption_check(Context& ctx, GameId g, std::span<const GameId> battery) {
  if (battery.empty()) throw UsageError("absorption battery is empty");
  for (GameId x : battery) {
    if (ctx.classify(ctx.store.sum(g, x)) != GameType::TInf) return false;
  }
  return true;
}

std::vector<GameId> near_infinity_search(Context& ctx, const Universe& u, GameType target,
                                         const ScanOptions& opts) {
  std::vector<GameId> found;
  if (u.day == 0) {
    for (GameId g : u.members) {
      if (ctx.classify(g) != target) continue;
      bool absorbs = true;
      for (GameId x : u.members) {
        if (x != kNullGame && ctx.classify(ctx.store.sum(g, x)) != GameType::TInf) {
          absorbs = false;
          break;
        }
      }
      if (absorbs) found.push_back(g);
    }
    return found;
  }

  const Universe below = universe(ctx.store, u.day - 1);
  const SumScanner scanner(ctx.store, below.members, 2);
  const auto& members = u.members;
  std::vector<SumScanner::Profile> profiles(members.size());
  parallel_chunks(members.size(), opts.chunks, opts.threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) profiles[i] = scanner.profile(members[i]);
  });

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (profiles[i].type == target) candidates.push_back(i);
  }
  std::vector<char> keep(candidates.size(), 0);
  parallel_chunks(candidates.size(), opts.chunks, opts.threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t c = lo; c < hi; ++c) {
      const auto& p = profiles[candidates[c]];
      bool absorbs = true;
      for (std::size_t j = 0; j < members.size() && absorbs; ++j) {
        if (members[j] == kNullGame) continue;
        absorbs = SumScanner::pair_type(p, profiles[j]) == GameType::TInf;
      }
      keep[c] = absorbs;
    }
  });
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (keep[c]) found.push_back(members[candidates[c]]);
  }
  return found;
}

}  // namespace tricgt
