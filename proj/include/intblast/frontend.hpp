#pragma once

#include "intblast/sexpr.hpp"
#include "intblast/term.hpp"

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace intblast {

/// `declare-const`, or `declare-fun` of an Int-valued uninterpreted
/// function (the only non-nullary declarations the frontend accepts).
struct Declaration {
  std::string name;
  Sort sort;
  std::vector<Sort> params;

  bool is_function() const { return !params.empty(); }
  /// The constant as a term. Only valid for nullary declarations.
  Term var() const { return mk_var(name, sort); }
};

struct Definition {
  std::string name;
  /// Parameters as variables; the body refers to them by these terms.
  std::vector<Term> params;
  Sort result = Sort::boolean();
  Term body;
};

struct Script {
  std::string logic;
  std::vector<Declaration> declarations;
  std::vector<Definition> definitions;
  std::vector<Term> assertions;
  std::map<std::string, std::string> options;
  bool has_check_sat = false;
  bool wants_model = false;

  /// Conjunction of all assertions (`true` when there are none).
  Term formula() const;
  /// Whether any declaration has Int sort or is a function. Such scripts
  /// are integer problems, not bit-vector ones.
  bool is_integer_problem() const;
  const Declaration *find_declaration(std::string_view name) const;
};

/// Names visible while parsing a standalone term.
struct SymbolTable {
  std::map<std::string, Term, std::less<>> constants;
  /// Function symbol -> (parameter sorts, result sort).
  std::map<std::string, std::pair<std::vector<Sort>, Sort>, std::less<>>
      functions;

  void add(const Term &var) { constants.insert_or_assign(var.name(), var); }
  /// Registers every free variable and function application in `t`.
  void add_symbols_of(const Term &t);
};

/// Parses and sort-checks an SMT-LIB 2 QF_BV script. `let` is inlined and
/// `:named` annotations are dropped; `define-fun` applications are kept as
/// Apply nodes until expand_defines. Throws ParseError, SortError or
/// UnsupportedError.
Script parse_script(std::string_view input);
Script parse_script(std::istream &in);

/// Beta-expands every definition application. The result has no
/// definitions. Throws RecursionError for self-referential definitions.
Script expand_defines(const Script &script);

Term parse_term(std::string_view text, const SymbolTable &symbols);
Term build_term(const SExpr &expr, const SymbolTable &symbols);
Sort parse_sort(const SExpr &expr);

/// Declarations for every constant/function in `terms`, then one assert per
/// term and `(check-sat)`. Declaration order follows first occurrence.
void print_script(std::ostream &os, const std::string &logic,
                  const std::vector<Term> &assertions);
/// Prints a script preserving its declaration order.
void print_script(std::ostream &os, const Script &script);

/// `(declare-fun name (params) sort)`.
std::string declaration_text(const std::string &name,
                             const std::vector<Sort> &params, Sort result);

} // namespace intblast
