#pragma once

#include "intblast/arith.hpp"
#include "intblast/frontend.hpp"
#include "intblast/term.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace intblast {

/// Bit-wise operators kept abstract as uninterpreted functions.
enum class AbstractOp { And, Shl, Lshr };

std::string_view abstract_op_name(AbstractOp op);

/// The true bit-vector meaning of an abstracted operator on unsigned
/// width-`k` values: a & b, (a << b) mod 2^k, a >> b (0 once b >= k).
Integer apply_abstract_op(AbstractOp op, unsigned k, const Integer &a,
                          const Integer &b);

/// One occurrence (up to structural equality) of bvand/bvshl/bvlshr.
struct AbstractedApp {
  AbstractOp op;
  unsigned width;
  Term lhs; // translated first argument
  Term rhs; // translated second argument
  Term app_term;
  Term origin;
};

/// A variable of the original formula and its integer counterpart. Bool
/// variables keep their name and sort and have width 0.
struct TranslatedVar {
  Term original;
  Term translated;
  unsigned width;
};

class TranslationMap {
public:
  const std::vector<TranslatedVar> &vars() const { return vars_; }
  const std::vector<AbstractedApp> &apps() const { return apps_; }
  const std::vector<Term> &range_constraints() const { return ranges_; }
  const std::map<std::pair<AbstractOp, unsigned>, std::string> &
  uf_registry() const {
    return ufs_;
  }

  const TranslatedVar *find_var(const std::string &original_name) const;
  /// Index of the app whose UF application is `app_term`.
  std::optional<std::size_t> find_app(const Term &app_term) const;

  /// Adds `var` (BV or Bool) if new and returns its entry.
  const TranslatedVar &add_var(const Term &var);
  /// Registers an abstracted application, sharing structurally equal ones.
  std::size_t add_app(AbstractOp op, unsigned width, const Term &lhs,
                      const Term &rhs, const Term &origin);
  /// Reserves names so that generated symbols never clash with them.
  void reserve_name(const std::string &name) { used_names_.insert(name); }

private:
  std::string fresh(const std::string &base);
  const std::string &uf_symbol(AbstractOp op, unsigned width);

  std::vector<TranslatedVar> vars_;
  std::unordered_map<std::string, std::size_t> var_index_;
  std::map<std::pair<AbstractOp, unsigned>, std::string> ufs_;
  std::vector<AbstractedApp> apps_;
  std::unordered_map<Term, std::size_t, TermHash> app_index_;
  std::vector<Term> ranges_;
  std::set<std::string> used_names_;
};

struct Translation {
  Term formula;
  TranslationMap map;
};

/// Translates a Bool core-operator QF_BV formula into QF_UFNIA. Every
/// declared constant is translated (so models cover them) in declaration
/// order, then the formula is walked.
Translation translate_formula(const Term &phi,
                              const std::vector<Declaration> &decls);

/// Integer/Bool translation of one core-operator term, extending `tm`.
Term translate_term(const Term &t, TranslationMap &tm);

/// Width-k literal for v. Throws RangeError unless 0 <= v < 2^k.
Term to_bv(const Integer &v, unsigned k);

/// Interprets the UF symbols of `tm` as the true bit-vector functions.
FunctionInterp true_bv_interp(const TranslationMap &tm);

/// `0 <= t <= 2^k - 1`.
Term range_constraint(const Term &t, unsigned k);

} // namespace intblast
