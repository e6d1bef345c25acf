// Text notation for games.
//
//   expr   := item ( ("+")? item )* ;
//   item   := atom ( "^" NAT | "_" NAT )* ;
//   atom   := DIGIT | "{" expr ("," expr)* "}" ;
//
// A digit is a Nim heap, braces list options, juxtaposition or "+" is a
// disjunctive sum, "^n" is an n-fold sum and "_n" wraps in n layers of braces.
// Suffixes bind to the preceding atom and NAT is maximal munch, so "1_12" is
// nest(1, 12); whitespace only matters in that it ends a NAT.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tricgt/game_store.hpp"

namespace tricgt {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct GameExpr {
  enum class Kind { Heap, Options, Repeat, Nest, Sum };

  Kind kind = Kind::Heap;
  // Heap digit for Heap, count for Repeat and Nest; unused otherwise.
  std::size_t value = 0;
  std::vector<GameExpr> children;

  bool operator==(const GameExpr&) const = default;
};

GameExpr parse_expr(std::string_view text);
GameId evaluate(GameStore& store, const GameExpr& expr);
GameId parse(GameStore& store, std::string_view text);

// Canonical brace form. Nim heaps print as digits; everything else prints as
// "{...}" with options in id order. Never factors a game into a sum.
std::string render(const GameStore& store, GameId g);

// Length of render(g). The text of a sum can be exponentially longer than its
// DAG, so callers check this before asking for the string.
std::uint64_t rendered_length(const GameStore& store, GameId g);

// parse(render(g)) == g, with the rendering streamed straight into the parser
// so the text is never held in memory.
bool round_trips(GameStore& store, GameId g);

// Upper bounds read off the syntax tree: distinct subgames and birthday.
struct ExprBounds {
  double subgames = 1;
  std::size_t birthday = 0;
};
ExprBounds expr_bounds(const GameExpr& expr);

// A random string of the grammar whose game stays small: at most
// `max_subgames` subgames and birthday at most `max_birthday`.
std::string random_expression(std::mt19937_64& rng, double max_subgames = 400, std::size_t max_birthday = 7);

}  // namespace tricgt
