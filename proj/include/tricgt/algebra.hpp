// Empirical algebra of types: tables derived from scans, type equations,
// forbidden-sum scans, battery-bounded equivalence and signatures.
//
// Scans come in two layers. Pairs among a small pool of games go through the
// interned store (sum + classify). A large `extended` set is instead paired
// with an option-closed `base` through SumScanner profiles, which needs no
// store growth and runs in parallel. Extended games whose options leave the
// base fall back to the interned route.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tricgt/context.hpp"
#include "tricgt/enumeration.hpp"
#include "tricgt/reference.hpp"
#include "tricgt/type_table.hpp"

namespace tricgt {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ScanOptions {
  std::size_t threads = 1;
  // Work partition for parallel scans; fixed so output never depends on threads.
  std::size_t chunks = 64;
};

// The games used as solutions of the 22 satisfiable type equations.
std::vector<GameId> known_witness_games(GameStore& store);

// Addition/Subtraction: every ordered pair of (base ∪ extra), plus every
// extended game against every base game (both orders). Multiple(k): every game
// of base ∪ extra ∪ extended. `base` must be option-closed when `extended`
// is used through the scanner.
TypeTable derive_type_table(Context& ctx, TableKind kind, std::span<const GameId> base,
                            std::span<const GameId> extra = {}, std::span<const GameId> extended = {},
                            const ScanOptions& opts = {});

// First (G, H) in (id G, id H) order with G ~ left, H ~ right, G+H ~ sum.
std::optional<std::pair<GameId, GameId>> solve_equation(Context& ctx, GameType left, GameType right,
                                                        GameType sum, std::span<const GameId> games);

struct Violation {
  GameId left;
  GameId right;
  GameType left_type;
  GameType right_type;
  GameType sum_type;
  const TypeEquation* equation;
};

struct ScanReport {
  std::size_t pairs_checked = 0;
  std::vector<Violation> violations;
};

// All unordered pairs within `base`, then every extended game with every base
// game, checked against `equations`.
ScanReport scan_forbidden(Context& ctx, std::span<const GameId> base, std::span<const GameId> extended = {},
                          std::span<const TypeEquation> equations = forbidden_equations(),
                          const ScanOptions& opts = {});

struct Distinction {
  GameId context;
  GameType left_type;
  GameType right_type;
};

struct EquivVerdict {
  std::optional<Distinction> distinction;
  std::size_t battery_size = 0;

  bool indistinguishable() const { return !distinction.has_value(); }
};

// First X in battery order with type(g+X) != type(h+X).
EquivVerdict equivalent_up_to(Context& ctx, GameId g, GameId h, std::span<const GameId> battery);

// universe(3), 2_0..2_10, 1^1..1^6, 1^0 2..1^5 2, {0,11}, 22, 3; first
// occurrence order, duplicates dropped.
std::vector<GameId> default_battery(GameStore& store);

// 2_0 .. 2_10.
std::vector<GameId> default_signature_contexts(GameStore& store);

std::vector<GameType> signature(Context& ctx, GameId g, std::span<const GameId> contexts);

// type(g + X) = ∞ for every X in the battery.
bool infinity_absorption_check(Context& ctx, GameId g, std::span<const GameId> battery);

// Members g of u with g ~ target and g + X ~ ∞ for every nonzero X in u.
std::vector<GameId> near_infinity_search(Context& ctx, const Universe& u, GameType target,
                                         const ScanOptions& opts = {});

}  // namespace tricgt
