// Sets of types and the 4x4 / 4x1 tables built from them.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricgt/classify.hpp"

namespace tricgt {

class TypeSet {
 public:
  constexpr TypeSet() = default;
  constexpr TypeSet(std::initializer_list<GameType> types) {
    for (GameType t : types) insert(t);
  }
  static constexpr TypeSet all() { return {GameType::T0, GameType::T1, GameType::T2, GameType::TInf}; }

  constexpr void insert(GameType t) { bits_ |= static_cast<std::uint8_t>(1u << index_of(t)); }
  constexpr bool contains(GameType t) const { return (bits_ >> index_of(t)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr TypeSet& operator|=(TypeSet other) {
    bits_ |= other.bits_;
    return *this;
  }
  constexpr bool operator==(const TypeSet&) const = default;

  std::vector<GameType> types() const;

 private:
  std::uint8_t bits_ = 0;
};

// Symbols in 0,1,2,∞ order ("12∞"); "none" when empty.
std::string format_typeset(TypeSet s);

enum class TableOp { Addition, Subtraction, Multiple };

struct TableKind {
  TableOp op = TableOp::Addition;
  // Number of copies for Multiple.
  std::size_t copies = 0;

  static constexpr TableKind addition() { return {TableOp::Addition, 0}; }
  static constexpr TableKind subtraction() { return {TableOp::Subtraction, 0}; }
  static constexpr TableKind multiple(std::size_t k) { return {TableOp::Multiple, k}; }
  static constexpr TableKind doubling() { return multiple(2); }
  static constexpr TableKind trebling() { return multiple(3); }

  bool operator==(const TableKind&) const = default;
  std::string name() const;
};

// "addition", "subtraction", "doubling", "trebling" or "multiple:K" (K >= 2).
std::optional<TableKind> parse_table_kind(std::string_view text);

// Addition:    cell(a, b) = types of G+H with G ~ a, H ~ b.
// Subtraction: cell(s, c) = types of G with G+H ~ s, H ~ c.
// Multiple(k): cell(t)    = types of k*G with G ~ t (single column).
class TypeTable {
 public:
  explicit TypeTable(TableKind kind) : kind_(kind) {}

  TableKind kind() const { return kind_; }
  std::size_t columns() const { return kind_.op == TableOp::Multiple ? 1 : 4; }

  TypeSet& at(GameType row, GameType col = GameType::T0) { return cells_[index_of(row)][index_of(col)]; }
  TypeSet at(GameType row, GameType col = GameType::T0) const { return cells_[index_of(row)][index_of(col)]; }

  // Printed row order: 0,1,2,∞ or, for subtraction, 3,2,1,∞ (3 standing for T0).
  std::vector<GameType> row_order() const;

  TypeTable& operator|=(const TypeTable& other);
  bool operator==(const TypeTable&) const = default;

 private:
  TableKind kind_;
  std::array<std::array<TypeSet, 4>, 4> cells_{};
};

// Plain-text table with the row and column labels of the usual layout.
std::string format_table(const TypeTable& table);

}  // namespace tricgt
