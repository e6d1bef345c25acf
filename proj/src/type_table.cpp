#include "tricgt/type_table.hpp"

#include <charconv>
#include <stdexcept>

namespace tricgt {

namespace {

std::size_t display_width(std::string_view s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

void pad_to(std::string& out, std::string_view cell, std::size_t width) {
  out += cell;
  for (std::size_t w = display_width(cell); w < width; ++w) out += ' ';
}

}  // namespace

std::vector<GameType> TypeSet::types() const {
  std::vector<GameType> out;
  for (GameType t : kAllTypes) {
    if (contains(t)) out.push_back(t);
  }
  return out;
}

std::string format_typeset(TypeSet s) {
  if (s.empty()) return "none";
  std::string out;
  for (GameType t : s.types()) out += type_symbol(t);
  return out;
}

std::string TableKind::name() const {
  switch (op) {
    case TableOp::Addition:
      return "addition";
    case TableOp::Subtraction:
      return "subtraction";
    case TableOp::Multiple:
      if (copies == 2) return "doubling";
      if (copies == 3) return "trebling";
      return "multiple:" + std::to_string(copies);
  }
  return "?";
}

std::optional<TableKind> parse_table_kind(std::string_view text) {
  if (text == "addition") return TableKind::addition();
  if (text == "subtraction") return TableKind::subtraction();
  if (text == "doubling") return TableKind::doubling();
  if (text == "trebling") return TableKind::trebling();
  constexpr std::string_view prefix = "multiple:";
  if (text.starts_with(prefix)) {
    const auto digits = text.substr(prefix.size());
    std::size_t k = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && end == digits.data() + digits.size() && k >= 2) return TableKind::multiple(k);
  }
  return std::nullopt;
}

std::vector<GameType> TypeTable::row_order() const {
  if (kind_.op == TableOp::Subtraction) return {GameType::T0, GameType::T2, GameType::T1, GameType::TInf};
  return {kAllTypes.begin(), kAllTypes.end()};
}

TypeTable& TypeTable::operator|=(const TypeTable& other) {
  if (!(other.kind_ == kind_)) throw std::invalid_argument("merging tables of different kinds");
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) cells_[r][c] |= other.cells_[r][c];
  }
  return *this;
}

std::string format_table(const TypeTable& table) {
  const bool subtraction = table.kind().op == TableOp::Subtraction;
  auto row_label = [&](GameType t) -> std::string {
    if (subtraction && t == GameType::T0) return "3";
    return std::string(type_symbol(t));
  };
  // In the subtraction row whose sum is T0, a T0 entry reads 3 as well.
  auto cell_text = [&](TypeSet s, GameType row) -> std::string {
    if (subtraction && s == TypeSet::all()) return "All";
    std::string text = format_typeset(s);
    if (subtraction && row == GameType::T0 && s.contains(GameType::T0)) text.front() = '3';
    return text;
  };

  std::string corner;
  std::vector<std::string> headers;
  if (table.kind().op == TableOp::Multiple) {
    corner = "G";
    const std::size_t k = table.kind().copies;
    if (k <= 3) {
      std::string h = "G";
      for (std::size_t i = 1; i < k; ++i) h += "+G";
      headers.push_back(h);
    } else {
      headers.push_back(std::to_string(k) + "G");
    }
  } else {
    corner = subtraction ? "-" : "+";
    for (GameType t : kAllTypes) headers.emplace_back(type_symbol(t));
  }

  std::vector<std::vector<std::string>> rows;
  for (GameType r : table.row_order()) {
    std::vector<std::string> row{row_label(r)};
    if (table.columns() == 1) {
      row.push_back(cell_text(table.at(r), r));
    } else {
      for (GameType c : kAllTypes) row.push_back(cell_text(table.at(r, c), r));
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(headers.size() + 1, display_width(corner));
  for (std::size_t c = 0; c < headers.size(); ++c) widths[c + 1] = display_width(headers[c]);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
  }

  std::string out;
  pad_to(out, corner, widths[0]);
  out += " |";
  for (std::size_t c = 0; c < headers.size(); ++c) {
    out += ' ';
    pad_to(out, headers[c], widths[c + 1]);
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  out += '\n';
  std::size_t rule = widths[0] + 1;
  for (std::size_t c = 1; c < widths.size(); ++c) rule += widths[c] + 1;
  out += std::string(widths[0] + 1, '-') + '+' + std::string(rule - widths[0], '-') + '\n';
  for (const auto& row : rows) {
    std::string line;
    pad_to(line, row[0], widths[0]);
    line += " |";
    for (std::size_t c = 1; c < row.size(); ++c) {
      line += ' ';
      pad_to(line, row[c], widths[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace tricgt
