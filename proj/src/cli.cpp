#include "tricgt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <thread>

#include "tricgt/algebra.hpp"
#include "tricgt/enumeration.hpp"
#include "tricgt/nim.hpp"
#include "tricgt/notation.hpp"
#include "tricgt/verify.hpp"

namespace tricgt {

namespace {

using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string text;
  json result;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 42;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
};

json type_json(GameType t) { return {{"type", type_letter(t)}, {"symbol", type_symbol(t)}}; }

GameType require_type(std::string_view text) {
  if (auto t = parse_type(text)) return *t;
  throw UsageError("unknown type '" + std::string(text) + "' (use P, N, O, Q or 0, 1, 2, inf)");
}

// "<T>+<T>=<T>", spaces allowed.
struct Equation {
  GameType left, right, sum;
};

Equation parse_equation(std::string text) {
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  const auto plus = text.find('+');
  const auto eq = text.find('=');
  if (plus == std::string::npos || eq == std::string::npos || eq < plus) {
    throw UsageError("equation must look like Q+Q=O");
  }
  return {require_type(text.substr(0, plus)), require_type(text.substr(plus + 1, eq - plus - 1)),
          require_type(text.substr(eq + 1))};
}

std::string equation_text(const Equation& e) {
  return std::string(type_letter(e.left)) + "+" + std::string(type_letter(e.right)) + "=" +
         std::string(type_letter(e.sum));
}

// Semicolon-separated expressions.
std::vector<std::string> split_list(const std::string& spec) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const auto semi = spec.find(';', pos);
    std::string item = spec.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    const auto first = item.find_first_not_of(' ');
    if (first != std::string::npos) out.push_back(item.substr(first, item.find_last_not_of(' ') - first + 1));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (out.empty()) throw UsageError("empty game list");
  return out;
}

std::size_t check_day(std::size_t day, std::size_t max) {
  if (day > max) throw UsageError("--day must be at most " + std::to_string(max));
  return day;
}

ScanOptions scan_options(const Globals& g) { return {g.threads, 64}; }

Outcome run_classify(Context& ctx, const std::string& expr) {
  const GameId g = parse(ctx.store, expr);
  const GameType t = ctx.classify(g);
  Outcome out;
  out.text = format_type(t) + "\n";
  out.result = type_json(t);
  out.result["expression"] = expr;
  if (auto move = ctx.classifier.winning_option(g)) {
    const std::string m = render(ctx.store, *move);
    out.text += "winning move to " + m + "\n";
    out.result["winning_option"] = m;
  }
  return out;
}

Outcome run_sum(Context& ctx, const std::vector<std::string>& exprs) {
  GameId acc = kNullGame;
  for (const auto& e : exprs) acc = ctx.store.sum(acc, parse(ctx.store, e));
  const GameType t = ctx.classify(acc);
  const auto stats = ctx.store.describe(acc);
  Outcome out;
  out.text = format_type(t) + "\noptions " + std::to_string(stats.option_count) + ", birthday " +
             std::to_string(stats.birthday) + ", subgames " + std::to_string(stats.subgame_count) + "\n";
  out.result = type_json(t);
  out.result["summands"] = exprs;
  out.result["options"] = stats.option_count;
  out.result["birthday"] = stats.birthday;
  out.result["subgames"] = stats.subgame_count;
  return out;
}

Outcome run_reduce(const std::string& heaps) {
  const auto p = NimPosition::parse(heaps);
  const auto form = reduce_nim(p);
  const GameType t = reduced_type(form);
  Outcome out;
  out.text = form.notation() + ", type " + format_type(t) + "\n";
  out.result = type_json(t);
  out.result["heaps"] = std::vector<unsigned>(p.heaps().begin(), p.heaps().end());
  out.result["reduced"] = form.notation();
  return out;
}

Outcome run_signature(Context& ctx, const std::string& expr, const std::string& contexts_spec) {
  const GameId g = parse(ctx.store, expr);
  std::vector<std::string> names;
  std::vector<GameId> contexts;
  if (contexts_spec.empty()) {
    for (std::size_t n = 0; n <= 10; ++n) names.push_back("2_" + std::to_string(n));
  } else {
    names = split_list(contexts_spec);
  }
  for (const auto& n : names) contexts.push_back(parse(ctx.store, n));
  const auto sig = signature(ctx, g, contexts);
  Outcome out;
  json types = json::array();
  for (std::size_t i = 0; i < sig.size(); ++i) {
    out.text += (i ? " " : "") + std::string(type_symbol(sig[i]));
    types.push_back(type_letter(sig[i]));
  }
  out.text += "\n";
  out.result = {{"expression", expr}, {"contexts", names}, {"signature", types}};
  return out;
}

std::optional<TypeTable> reference_table(TableKind kind) {
  if (kind == TableKind::addition()) return known_addition_table();
  if (kind == TableKind::subtraction()) return known_subtraction_table();
  if (kind == TableKind::doubling()) return known_doubling_table();
  if (kind == TableKind::trebling()) return known_trebling_table();
  return std::nullopt;
}

Outcome run_table(Context& ctx, const Globals& globals, const std::string& kind_text, std::size_t day) {
  const auto kind = parse_table_kind(kind_text);
  if (!kind) throw UsageError("unknown table '" + kind_text + "'");
  check_day(day, 4);
  // A k-fold scan at day 4 keeps 16^k sums per game.
  if (day == 4 && kind->op == TableOp::Multiple && kind->copies > 4) {
    throw UsageError("day-4 multiple tables support at most 4 copies");
  }
  const auto base = universe(ctx.store, std::min<std::size_t>(day, 3)).members;
  const auto extra = known_witness_games(ctx.store);
  std::vector<GameId> extended;
  if (day == 4) extended = universe(ctx.store, 4).members;
  const auto table = derive_type_table(ctx, *kind, base, extra, extended, scan_options(globals));

  Outcome out;
  out.text = format_table(table);
  json rows = json::array();
  for (GameType r : table.row_order()) {
    json cells = json::array();
    for (std::size_t c = 0; c < table.columns(); ++c) {
      json cell = json::array();
      for (GameType t : table.at(r, kAllTypes[c]).types()) cell.push_back(type_letter(t));
      cells.push_back(cell);
    }
    rows.push_back({{"row", type_letter(r)}, {"cells", cells}});
  }
  out.result = {{"kind", kind->name()}, {"day", day}, {"rows", rows}};
  if (auto ref = reference_table(*kind)) {
    const bool same = *ref == table;
    out.result["matches_known"] = same;
    out.text += same ? "matches the known table\n" : "differs from the known table\n";
  }
  return out;
}

Outcome run_solve(Context& ctx, const std::string& eq_text, std::size_t day) {
  const auto eq = parse_equation(eq_text);
  auto pool = universe(ctx.store, check_day(day, 3)).members;
  const auto extra = known_witness_games(ctx.store);
  pool.insert(pool.end(), extra.begin(), extra.end());
  const auto found = solve_equation(ctx, eq.left, eq.right, eq.sum, pool);
  Outcome out;
  out.result = {{"equation", equation_text(eq)}, {"day", day}, {"found", found.has_value()}};
  if (!found) {
    out.code = 1;
    out.text = "no solution in scanned universe\n";
    return out;
  }
  const std::string l = render(ctx.store, found->first), r = render(ctx.store, found->second);
  out.text = equation_text(eq) + ": " + l + " + " + r + "\n";
  out.result["left"] = l;
  out.result["right"] = r;
  return out;
}

Outcome run_scan(Context& ctx, const Globals& globals, std::size_t day, bool extended) {
  const auto base = universe(ctx.store, check_day(day, extended ? 3 : 4)).members;
  std::vector<GameId> ext;
  if (extended) ext = universe(ctx.store, day + 1).members;
  const auto report = scan_forbidden(ctx, base, ext, forbidden_equations(), scan_options(globals));
  Outcome out;
  out.code = report.violations.empty() ? 0 : 1;
  out.text = "checked " + std::to_string(report.pairs_checked) + " pairs, " +
             std::to_string(report.violations.size()) + " violations\n";
  json violations = json::array();
  for (const auto& v : report.violations) {
    const std::string l = render(ctx.store, v.left), r = render(ctx.store, v.right);
    out.text += "  " + l + " + " + r + " violates " + v.equation->text() + "\n";
    violations.push_back({{"left", l}, {"right", r}, {"equation", v.equation->text()}, {"tag", v.equation->tag}});
  }
  out.result = {{"day", day}, {"extended", extended}, {"pairs_checked", report.pairs_checked},
                {"violations", violations}};
  return out;
}

Outcome run_equiv(Context& ctx, const std::string& a, const std::string& b, const std::string& battery_spec) {
  const GameId g = parse(ctx.store, a);
  const GameId h = parse(ctx.store, b);
  std::vector<GameId> battery;
  if (battery_spec == "default") {
    battery = default_battery(ctx.store);
  } else {
    for (const auto& item : split_list(battery_spec)) battery.push_back(parse(ctx.store, item));
  }
  const auto verdict = equivalent_up_to(ctx, g, h, battery);
  Outcome out;
  out.result = {{"left", a}, {"right", b}, {"battery_size", verdict.battery_size},
                {"indistinguishable", verdict.indistinguishable()}};
  if (verdict.indistinguishable()) {
    out.text = "indistinguishable up to a battery of " + std::to_string(verdict.battery_size) + " games\n";
    return out;
  }
  const auto& d = *verdict.distinction;
  const std::string x = render(ctx.store, d.context);
  out.code = 1;
  out.text = "distinguished by " + x + ": " + format_type(d.left_type) + " vs " + format_type(d.right_type) + "\n";
  out.result["context"] = x;
  out.result["left_type"] = type_letter(d.left_type);
  out.result["right_type"] = type_letter(d.right_type);
  return out;
}

Outcome run_near_inf(Context& ctx, const Globals& globals, const std::string& type_text, std::size_t day) {
  const GameType target = require_type(type_text);
  const auto u = universe(ctx.store, check_day(day, 4));
  const auto found = near_infinity_search(ctx, u, target, scan_options(globals));
  Outcome out;
  out.text = std::to_string(found.size()) + " candidates of type " + format_type(target) + " at day " +
             std::to_string(day) + "\n";
  json games = json::array();
  for (GameId g : found) {
    const std::string s = render(ctx.store, g);
    out.text += "  " + s + "\n";
    games.push_back(s);
  }
  out.result = {{"day", day}, {"target", type_letter(target)}, {"candidates", games}};
  return out;
}

Outcome run_enumerate(Context& ctx, std::size_t day, bool with_census) {
  const auto u = universe(ctx.store, check_day(day, 4));
  Outcome out;
  out.text = "day " + std::to_string(day) + ": " + std::to_string(u.size()) + " games\n";
  out.result = {{"day", day}, {"size", u.size()}};
  if (with_census) {
    const auto c = census(ctx.classifier, u.members);
    json counts = json::object();
    for (GameType t : kAllTypes) {
      out.text += "  " + format_type(t) + ": " + std::to_string(c[t]) + "\n";
      counts[std::string(type_letter(t))] = c[t];
    }
    out.result["census"] = counts;
  } else {
    json games = json::array();
    for (GameId g : u.members) {
      const std::string s = render(ctx.store, g);
      out.text += "  " + s + "\n";
      games.push_back(s);
    }
    out.result["games"] = games;
  }
  return out;
}

Outcome run_verify(const Globals& globals, bool full) {
  const VerifyOptions opts{full, globals.seed, globals.threads};
  Context ctx;
  Outcome out;
  json checks = json::array();
  bool all = true;
  char line[64];
  for (const auto& spec : verification_checks()) {
    const auto r = run_check(spec, ctx, opts);
    all = all && r.passed;
    std::snprintf(line, sizeof line, "%-4s %-22s %8.2fs  ", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
    out.text += line + r.detail + "\n";
    checks.push_back({{"name", r.name}, {"criterion", spec.criterion}, {"passed", r.passed},
                      {"detail", r.detail}, {"seconds", r.seconds}});
  }
  out.code = all ? 0 : 1;
  out.text += all ? "all checks passed\n" : "some checks FAILED\n";
  out.result = {{"mode", full ? "full" : "quick"}, {"seed", globals.seed}, {"passed", all}, {"checks", checks}};
  return out;
}

}  // namespace

CommandResult dispatch(std::span<const std::string> args) {
  CLI::App app{"Three-player impartial games: types, sums, Nim and tables", "tricgt"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_flag("--json", globals.json, "Emit JSON");
  app.add_option("--seed", globals.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--threads", globals.threads, "Worker threads for scans")->check(CLI::Range(1, 1024));

  std::string expr, expr2, text, contexts, battery = "default", type_text;
  std::vector<std::string> exprs;
  std::size_t day = 3;
  bool extended = false, with_census = false, quick = false, full = false;

  auto* classify_cmd = app.add_subcommand("classify", "Type of a game");
  classify_cmd->add_option("EXPR", expr, "Game in notation")->required();

  auto* sum_cmd = app.add_subcommand("sum", "Type of a disjunctive sum");
  sum_cmd->add_option("EXPR", exprs, "Summands")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduced form of a Nim position");
  reduce_cmd->add_option("HEAPS", text, "Comma-separated heap sizes, e.g. 1,1,2,5")->required();

  auto* signature_cmd = app.add_subcommand("signature", "Types of G + X over a list of contexts");
  signature_cmd->add_option("EXPR", expr, "Game in notation")->required();
  signature_cmd->add_option("--contexts", contexts, "Semicolon-separated games (default 2_0 .. 2_10)");

  auto* table_cmd = app.add_subcommand("table", "Derive a type table");
  table_cmd->add_option("KIND", text, "addition, subtraction, doubling, trebling or multiple:K")->required();
  table_cmd->add_option("--day", day, "Universe day, 0..4")->capture_default_str();

  auto* solve_cmd = app.add_subcommand("solve", "Find games realizing a type equation");
  solve_cmd->add_option("EQ", text, "Equation such as Q+Q=O")->required();
  solve_cmd->add_option("--day", day, "Universe day, 0..3")->capture_default_str();

  auto* scan_cmd = app.add_subcommand("scan-forbidden", "Look for sums of impossible type");
  scan_cmd->add_option("--day", day, "Base universe day")->capture_default_str();
  scan_cmd->add_flag("--extended", extended, "Also pair every game of the next day with the base");

  auto* equiv_cmd = app.add_subcommand("equiv", "Compare two games over a battery of contexts");
  equiv_cmd->add_option("EXPR", expr, "First game")->required();
  equiv_cmd->add_option("EXPR2", expr2, "Second game")->required();
  equiv_cmd->add_option("--battery", battery, "'default' or semicolon-separated games")->capture_default_str();

  auto* near_cmd = app.add_subcommand("near-inf", "Games G with G + X of type Q for every nonzero X");
  near_cmd->add_option("--type", type_text, "Type of the candidates")->required();
  near_cmd->add_option("--day", day, "Universe day, 0..4")->capture_default_str();

  auto* enum_cmd = app.add_subcommand("enumerate", "List or count the games born by a day");
  enum_cmd->add_option("--day", day, "Universe day, 0..4")->required();
  enum_cmd->add_flag("--census", with_census, "Count games per type");

  auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction suite");
  auto* quick_flag = verify_cmd->add_flag("--quick", quick, "Day-3 scale (default)");
  verify_cmd->add_flag("--full", full, "Add the day-4 scans")->excludes(quick_flag);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    if (code == 0) return {0, out.str()};
    return {2, err.str() + "\n" + app.help()};
  }

  CLI::App* cmd = app.get_subcommands().front();
  Outcome outcome;
  try {
    Context ctx;
    if (cmd == classify_cmd) {
      outcome = run_classify(ctx, expr);
    } else if (cmd == sum_cmd) {
      outcome = run_sum(ctx, exprs);
    } else if (cmd == reduce_cmd) {
      outcome = run_reduce(text);
    } else if (cmd == signature_cmd) {
      outcome = run_signature(ctx, expr, contexts);
    } else if (cmd == table_cmd) {
      outcome = run_table(ctx, globals, text, day);
    } else if (cmd == solve_cmd) {
      outcome = run_solve(ctx, text, day);
    } else if (cmd == scan_cmd) {
      outcome = run_scan(ctx, globals, day, extended);
    } else if (cmd == equiv_cmd) {
      outcome = run_equiv(ctx, expr, expr2, battery);
    } else if (cmd == near_cmd) {
      outcome = run_near_inf(ctx, globals, type_text, day);
    } else if (cmd == enum_cmd) {
      outcome = run_enumerate(ctx, day, with_census);
    } else {
      outcome = run_verify(globals, full);
    }
  } catch (const ParseError& e) {
    outcome = {2, std::string("parse error: ") + e.what() + "\n", nullptr};
    if (globals.json) {
      return {2, json{{"command", cmd->get_name()}, {"result", nullptr}, {"error", e.what()}, {"offset", e.offset()}}
                     .dump(2) + "\n"};
    }
  } catch (const std::logic_error& e) {
    // UsageError, OutOfRange, InvalidReference and CapacityError all land here.
    outcome = {2, std::string("error: ") + e.what() + "\n", nullptr};
    if (globals.json) {
      return {2, json{{"command", cmd->get_name()}, {"result", nullptr}, {"error", e.what()}}.dump(2) + "\n"};
    }
  }

  if (!globals.json) return {outcome.code, outcome.text};
  return {outcome.code, json{{"command", cmd->get_name()}, {"result", outcome.result}}.dump(2) + "\n"};
}

}  // namespace tricgt
