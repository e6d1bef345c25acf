// Known results about types of sums, kept as data so that scans, table
// comparisons and the verify command all read one copy.

#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "tricgt/classify.hpp"
#include "tricgt/type_table.hpp"

namespace tricgt {

// left + right = sum at the level of types. Matching ignores summand order.
struct TypeEquation {
  GameType left;
  GameType right;
  GameType sum;
  std::string_view tag;

  bool matches(GameType a, GameType b, GameType s) const {
    return s == sum && ((a == left && b == right) || (a == right && b == left));
  }
  std::string text() const;
};

// The 18 type equations that have no solution, one per unordered summand pair.
std::span<const TypeEquation> forbidden_equations();

// The 22 satisfiable type equations, each with an explicit solution written in
// game notation.
struct SumExample {
  TypeEquation equation;
  std::string_view left;
  std::string_view right;
};
std::span<const SumExample> known_sum_examples();

TypeTable known_addition_table();
TypeTable known_subtraction_table();
TypeTable known_doubling_table();
TypeTable known_trebling_table();

// Types of 1^m + 2_n (or 1^m 2 + 2_n when with_two) for m = 0..5, n = 0..10.
using SignatureGrid = std::array<std::array<GameType, 11>, 6>;
const SignatureGrid& known_signature_table(bool with_two);

}  // namespace tricgt
