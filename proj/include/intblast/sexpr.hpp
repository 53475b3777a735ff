#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace intblast {

/// One node of an SMT-LIB s-expression.
struct SExpr {
  enum class Type { List, Symbol, Keyword, Numeral, Decimal, Binary, Hex, String };

  Type type = Type::List;
  /// Token text. Quoted symbols hold their contents without the bars;
  /// #b/#x literals hold the digits only.
  std::string text;
  /// Set for `|...|` symbols, which never denote reserved words.
  bool quoted = false;
  std::vector<SExpr> items;
  std::size_t line = 0;
  std::size_t column = 0;

  bool is_list() const { return type == Type::List; }
  bool is_symbol(std::string_view s) const {
    return type == Type::Symbol && !quoted && text == s;
  }
};

/// Reads every top-level s-expression in `input`. Comments run from `;` to
/// the end of the line. Throws ParseError with the offending position.
std::vector<SExpr> parse_sexprs(std::string_view input);

/// Position of the end of the first complete s-expression in `input`
/// (skipping leading whitespace and comments), or npos if incomplete.
std::size_t complete_sexpr_end(std::string_view input);

} // namespace intblast
