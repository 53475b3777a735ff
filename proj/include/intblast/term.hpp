#pragma once

#include "intblast/integer.hpp"
#include "intblast/sort.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace intblast {

enum class Kind : std::uint8_t {
  // leaves
  Const,
  Var,
  // Boolean structure
  Not,
  And,
  Or,
  Xor,
  Implies,
  Equal,
  Distinct,
  Ite,
  // bit-vector arithmetic
  BvAdd,
  BvSub,
  BvNeg,
  BvMul,
  BvUdiv,
  BvUrem,
  BvSdiv,
  BvSrem,
  BvSmod,
  // bit-wise
  BvNot,
  BvAnd,
  BvOr,
  BvXor,
  BvNand,
  BvNor,
  BvXnor,
  BvComp,
  BvShl,
  BvLshr,
  BvAshr,
  // structural
  Concat,
  Extract,
  ZeroExtend,
  SignExtend,
  RotateLeft,
  RotateRight,
  Repeat,
  // bit-vector predicates
  BvUlt,
  BvUle,
  BvUgt,
  BvUge,
  BvSlt,
  BvSle,
  BvSgt,
  BvSge,
  // integer arithmetic
  IntAdd,
  IntSub,
  IntNeg,
  IntMul,
  IntDiv,
  IntMod,
  IntLt,
  IntLe,
  IntGt,
  IntGe,
  // application of an uninterpreted or defined function
  Apply,
};

/// SMT-LIB symbol of an operator kind (`bvadd`, `+`, `extract`, ...).
/// Leaves and Apply have no fixed symbol and return an empty view.
std::string_view kind_symbol(Kind kind);

/// Number of numeric indices carried by an indexed operator (extract: 2).
unsigned kind_num_indices(Kind kind);

class Term;

namespace detail {
struct TermNode;
}

/// Immutable, sorted term. Copies share structure; equality is structural.
class Term {
public:
  Term() = default;

  Kind kind() const;
  const Sort &sort() const;
  const std::vector<Term> &children() const;
  const Term &operator[](std::size_t i) const { return children()[i]; }
  std::size_t num_children() const { return children().size(); }
  const std::vector<unsigned> &indices() const;
  unsigned index(std::size_t i) const { return indices()[i]; }
  /// Variable or function symbol.
  const std::string &name() const;
  /// Constant payload: Boolean constants store 0/1.
  const Integer &value() const;

  std::size_t hash() const;
  bool is_null() const { return !node_; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_true() const;
  bool is_false() const;

  /// Pointer identity, not structural equality.
  bool same_node(const Term &other) const { return node_ == other.node_; }

  friend bool operator==(const Term &a, const Term &b);

private:
  explicit Term(std::shared_ptr<const detail::TermNode> node)
      : node_(std::move(node)) {}

  friend Term make_node(Kind, Sort, std::vector<Term>, std::vector<unsigned>,
                        std::string, Integer);

  std::shared_ptr<const detail::TermNode> node_;
};

struct TermHash {
  std::size_t operator()(const Term &t) const { return t.hash(); }
};

/// Sort of `kind` applied to arguments of the given sorts. Throws SortError.
Sort infer_sort(Kind kind, const std::vector<Sort> &args,
                const std::vector<unsigned> &indices);

Term mk_var(std::string name, Sort sort);
Term mk_bool(bool value);
/// Throws SortError unless 0 <= value < 2^width.
Term mk_bv(const Integer &value, unsigned width);
/// Integer literal; must be non-negative (negation is an explicit IntNeg).
Term mk_int(const Integer &value);
/// Sort-checked operator application.
Term mk_term(Kind kind, std::vector<Term> children,
             std::vector<unsigned> indices = {});
Term mk_apply(std::string name, std::vector<Term> args, Sort result);

Term mk_not(const Term &a);
/// Conjunction; `true` for no operands, the operand itself for one.
Term mk_and(std::vector<Term> operands);
Term mk_or(std::vector<Term> operands);
Term mk_implies(const Term &a, const Term &b);
Term mk_eq(const Term &a, const Term &b);
Term mk_ite(const Term &c, const Term &a, const Term &b);

/// Same operator, indices and symbol as `t`, applied to new children.
Term with_children(const Term &t, std::vector<Term> children);

/// Rebuilds `root` bottom-up. `fn` receives each original subterm together
/// with a copy whose children were already rewritten, and returns the
/// replacement. Shared subterms are rewritten once.
Term rewrite_bottom_up(
    const Term &root,
    const std::function<Term(const Term &original, const Term &rebuilt)> &fn);

/// Unique subterms (structurally) in post-order: children before parents.
std::vector<Term> post_order(const Term &root);

/// Number of unique subterms.
std::size_t dag_size(const Term &root);

} // namespace intblast

template <> struct std::hash<intblast::Term> {
  std::size_t operator()(const intblast::Term &t) const { return t.hash(); }
};
