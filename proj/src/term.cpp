#include "intblast/term.hpp"

#include "intblast/errors.hpp"

#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace intblast {

namespace detail {

struct TermNode {
  Kind kind;
  Sort sort;
  std::vector<Term> children;
  std::vector<unsigned> indices;
  std::string name;
  Integer value;
  std::size_t hash;
};

} // namespace detail

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const std::vector<Term> kNoChildren;
const std::vector<unsigned> kNoIndices;
const std::string kNoName;
const Integer kZero;

[[noreturn]] void sort_error(Kind kind, const std::string &msg) {
  std::string sym(kind_symbol(kind));
  throw SortError((sym.empty() ? std::string("term") : sym) + ": " + msg);
}

void expect_arity(Kind kind, const std::vector<Sort> &args, std::size_t n) {
  if (args.size() != n)
    sort_error(kind, "expected " + std::to_string(n) + " argument(s), got " +
                         std::to_string(args.size()));
}

void expect_all(Kind kind, const std::vector<Sort> &args, Sort::Kind sk,
                const char *what) {
  for (const Sort &s : args)
    if (s.kind() != sk)
      sort_error(kind, std::string("expected ") + what + " argument, got " +
                           s.to_string());
}

unsigned same_bv_width(Kind kind, const std::vector<Sort> &args) {
  expect_all(kind, args, Sort::Kind::BitVec, "bit-vector");
  for (const Sort &s : args)
    if (s.width() != args.front().width())
      sort_error(kind, "bit-vector widths differ (" +
                           args.front().to_string() + " vs " + s.to_string() +
                           ")");
  return args.front().width();
}

} // namespace

std::string_view kind_symbol(Kind kind) {
  switch (kind) {
  case Kind::Const:
  case Kind::Var:
  case Kind::Apply:
    return {};
  case Kind::Not: return "not";
  case Kind::And: return "and";
  case Kind::Or: return "or";
  case Kind::Xor: return "xor";
  case Kind::Implies: return "=>";
  case Kind::Equal: return "=";
  case Kind::Distinct: return "distinct";
  case Kind::Ite: return "ite";
  case Kind::BvAdd: return "bvadd";
  case Kind::BvSub: return "bvsub";
  case Kind::BvNeg: return "bvneg";
  case Kind::BvMul: return "bvmul";
  case Kind::BvUdiv: return "bvudiv";
  case Kind::BvUrem: return "bvurem";
  case Kind::BvSdiv: return "bvsdiv";
  case Kind::BvSrem: return "bvsrem";
  case Kind::BvSmod: return "bvsmod";
  case Kind::BvNot: return "bvnot";
  case Kind::BvAnd: return "bvand";
  case Kind::BvOr: return "bvor";
  case Kind::BvXor: return "bvxor";
  case Kind::BvNand: return "bvnand";
  case Kind::BvNor: return "bvnor";
  case Kind::BvXnor: return "bvxnor";
  case Kind::BvComp: return "bvcomp";
  case Kind::BvShl: return "bvshl";
  case Kind::BvLshr: return "bvlshr";
  case Kind::BvAshr: return "bvashr";
  case Kind::Concat: return "concat";
  case Kind::Extract: return "extract";
  case Kind::ZeroExtend: return "zero_extend";
  case Kind::SignExtend: return "sign_extend";
  case Kind::RotateLeft: return "rotate_left";
  case Kind::RotateRight: return "rotate_right";
  case Kind::Repeat: return "repeat";
  case Kind::BvUlt: return "bvult";
  case Kind::BvUle: return "bvule";
  case Kind::BvUgt: return "bvugt";
  case Kind::BvUge: return "bvuge";
  case Kind::BvSlt: return "bvslt";
  case Kind::BvSle: return "bvsle";
  case Kind::BvSgt: return "bvsgt";
  case Kind::BvSge: return "bvsge";
  case Kind::IntAdd: return "+";
  case Kind::IntSub: return "-";
  case Kind::IntNeg: return "-";
  case Kind::IntMul: return "*";
  case Kind::IntDiv: return "div";
  case Kind::IntMod: return "mod";
  case Kind::IntLt: return "<";
  case Kind::IntLe: return "<=";
  case Kind::IntGt: return ">";
  case Kind::IntGe: return ">=";
  }
  return {};
}

unsigned kind_num_indices(Kind kind) {
  switch (kind) {
  case Kind::Extract:
    return 2;
  case Kind::ZeroExtend:
  case Kind::SignExtend:
  case Kind::RotateLeft:
  case Kind::RotateRight:
  case Kind::Repeat:
    return 1;
  default:
    return 0;
  }
}

Sort Sort::bitvec(unsigned width) {
  if (width == 0)
    throw SortError("bit-vector width must be positive");
  return Sort(Kind::BitVec, width);
}

std::string Sort::to_string() const {
  switch (kind_) {
  case Kind::Bool:
    return "Bool";
  case Kind::Int:
    return "Int";
  case Kind::BitVec:
    return "(_ BitVec " + std::to_string(width_) + ")";
  }
  return {};
}

Sort infer_sort(Kind kind, const std::vector<Sort> &args,
                const std::vector<unsigned> &indices) {
  if (indices.size() != kind_num_indices(kind))
    sort_error(kind, "wrong number of indices");
  switch (kind) {
  case Kind::Const:
  case Kind::Var:
  case Kind::Apply:
    sort_error(kind, "leaf kinds have no inferred sort");

  case Kind::Not:
    expect_arity(kind, args, 1);
    expect_all(kind, args, Sort::Kind::Bool, "Bool");
    return Sort::boolean();
  case Kind::And:
  case Kind::Or:
    if (args.empty())
      sort_error(kind, "expected at least one argument");
    expect_all(kind, args, Sort::Kind::Bool, "Bool");
    return Sort::boolean();
  case Kind::Xor:
  case Kind::Implies:
    expect_arity(kind, args, 2);
    expect_all(kind, args, Sort::Kind::Bool, "Bool");
    return Sort::boolean();
  case Kind::Equal:
    expect_arity(kind, args, 2);
    if (!(args[0] == args[1]))
      sort_error(kind, "operands have different sorts (" + args[0].to_string() +
                           " vs " + args[1].to_string() + ")");
    return Sort::boolean();
  case Kind::Distinct:
    if (args.size() < 2)
      sort_error(kind, "expected at least two arguments");
    for (const Sort &s : args)
      if (!(s == args.front()))
        sort_error(kind, "operands have different sorts");
    return Sort::boolean();
  case Kind::Ite:
    expect_arity(kind, args, 3);
    if (!args[0].is_bool())
      sort_error(kind, "condition must be Bool");
    if (!(args[1] == args[2]))
      sort_error(kind, "branches have different sorts (" + args[1].to_string() +
                           " vs " + args[2].to_string() + ")");
    return args[1];

  case Kind::BvAdd:
  case Kind::BvSub:
  case Kind::BvMul:
  case Kind::BvUdiv:
  case Kind::BvUrem:
  case Kind::BvSdiv:
  case Kind::BvSrem:
  case Kind::BvSmod:
  case Kind::BvAnd:
  case Kind::BvOr:
  case Kind::BvXor:
  case Kind::BvNand:
  case Kind::BvNor:
  case Kind::BvXnor:
  case Kind::BvShl:
  case Kind::BvLshr:
  case Kind::BvAshr:
    expect_arity(kind, args, 2);
    return Sort::bitvec(same_bv_width(kind, args));
  case Kind::BvNeg:
  case Kind::BvNot:
    expect_arity(kind, args, 1);
    return Sort::bitvec(same_bv_width(kind, args));
  case Kind::BvComp:
    expect_arity(kind, args, 2);
    same_bv_width(kind, args);
    return Sort::bitvec(1);
  case Kind::Concat:
    expect_arity(kind, args, 2);
    expect_all(kind, args, Sort::Kind::BitVec, "bit-vector");
    return Sort::bitvec(args[0].width() + args[1].width());
  case Kind::Extract: {
    expect_arity(kind, args, 1);
    unsigned w = same_bv_width(kind, args);
    unsigned hi = indices[0], lo = indices[1];
    if (!(hi < w && lo <= hi))
      sort_error(kind, "indices " + std::to_string(hi) + " " +
                           std::to_string(lo) + " invalid for width " +
                           std::to_string(w));
    return Sort::bitvec(hi - lo + 1);
  }
  case Kind::ZeroExtend:
  case Kind::SignExtend:
    expect_arity(kind, args, 1);
    return Sort::bitvec(same_bv_width(kind, args) + indices[0]);
  case Kind::RotateLeft:
  case Kind::RotateRight:
    expect_arity(kind, args, 1);
    return Sort::bitvec(same_bv_width(kind, args));
  case Kind::Repeat:
    expect_arity(kind, args, 1);
    if (indices[0] == 0)
      sort_error(kind, "repeat count must be positive");
    return Sort::bitvec(same_bv_width(kind, args) * indices[0]);
  case Kind::BvUlt:
  case Kind::BvUle:
  case Kind::BvUgt:
  case Kind::BvUge:
  case Kind::BvSlt:
  case Kind::BvSle:
  case Kind::BvSgt:
  case Kind::BvSge:
    expect_arity(kind, args, 2);
    same_bv_width(kind, args);
    return Sort::boolean();

  case Kind::IntAdd:
  case Kind::IntSub:
  case Kind::IntMul:
  case Kind::IntDiv:
  case Kind::IntMod:
    expect_arity(kind, args, 2);
    expect_all(kind, args, Sort::Kind::Int, "Int");
    return Sort::integer();
  case Kind::IntNeg:
    expect_arity(kind, args, 1);
    expect_all(kind, args, Sort::Kind::Int, "Int");
    return Sort::integer();
  case Kind::IntLt:
  case Kind::IntLe:
  case Kind::IntGt:
  case Kind::IntGe:
    expect_arity(kind, args, 2);
    expect_all(kind, args, Sort::Kind::Int, "Int");
    return Sort::boolean();
  }
  sort_error(kind, "unknown operator");
}

Term make_node(Kind kind, Sort sort, std::vector<Term> children,
               std::vector<unsigned> indices, std::string name, Integer value) {
  std::size_t h = combine(static_cast<std::size_t>(kind),
                          static_cast<std::size_t>(sort.kind()));
  h = combine(h, sort.width());
  for (unsigned i : indices)
    h = combine(h, i);
  if (!name.empty())
    h = combine(h, std::hash<std::string>{}(name));
  if (kind == Kind::Const)
    h = combine(h, static_cast<std::size_t>(static_cast<std::uint64_t>(
                       value & Integer(0xffffffffffffffffULL))));
  for (const Term &c : children)
    h = combine(h, c.hash());
  auto node = std::make_shared<const detail::TermNode>(detail::TermNode{
      kind, sort, std::move(children), std::move(indices), std::move(name),
      std::move(value), h});
  return Term(std::move(node));
}

Kind Term::kind() const { return node_->kind; }
const Sort &Term::sort() const { return node_->sort; }
const std::vector<Term> &Term::children() const {
  return node_ ? node_->children : kNoChildren;
}
const std::vector<unsigned> &Term::indices() const {
  return node_ ? node_->indices : kNoIndices;
}
const std::string &Term::name() const { return node_ ? node_->name : kNoName; }
const Integer &Term::value() const { return node_ ? node_->value : kZero; }
std::size_t Term::hash() const { return node_ ? node_->hash : 0; }

bool Term::is_true() const {
  return node_ && node_->kind == Kind::Const && node_->sort.is_bool() &&
         node_->value == 1;
}

bool Term::is_false() const {
  return node_ && node_->kind == Kind::Const && node_->sort.is_bool() &&
         node_->value == 0;
}

bool operator==(const Term &a, const Term &b) {
  if (a.node_ == b.node_)
    return true;
  if (!a.node_ || !b.node_)
    return false;
  const detail::TermNode &x = *a.node_;
  const detail::TermNode &y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || !(x.sort == y.sort) ||
      x.indices != y.indices || x.name != y.name || x.value != y.value ||
      x.children.size() != y.children.size())
    return false;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (!(x.children[i] == y.children[i]))
      return false;
  return true;
}

Term mk_var(std::string name, Sort sort) {
  if (name.empty())
    throw SortError("variable name must not be empty");
  return make_node(Kind::Var, sort, {}, {}, std::move(name), 0);
}

Term mk_bool(bool value) {
  return make_node(Kind::Const, Sort::boolean(), {}, {}, {}, value ? 1 : 0);
}

Term mk_bv(const Integer &value, unsigned width) {
  Sort s = Sort::bitvec(width);
  if (value < 0 || value >= pow2(width))
    throw SortError("bit-vector literal " + value.str() +
                    " does not fit in width " + std::to_string(width));
  return make_node(Kind::Const, s, {}, {}, {}, value);
}

Term mk_int(const Integer &value) {
  if (value < 0)
    throw SortError("integer literal must be non-negative");
  return make_node(Kind::Const, Sort::integer(), {}, {}, {}, value);
}

Term mk_term(Kind kind, std::vector<Term> children,
             std::vector<unsigned> indices) {
  std::vector<Sort> sorts;
  sorts.reserve(children.size());
  for (const Term &c : children) {
    if (c.is_null())
      throw InternalError("null child term");
    sorts.push_back(c.sort());
  }
  Sort s = infer_sort(kind, sorts, indices);
  return make_node(kind, s, std::move(children), std::move(indices), {}, 0);
}

Term mk_apply(std::string name, std::vector<Term> args, Sort result) {
  if (name.empty())
    throw SortError("function name must not be empty");
  return make_node(Kind::Apply, result, std::move(args), {}, std::move(name),
                   0);
}

Term mk_not(const Term &a) { return mk_term(Kind::Not, {a}); }

Term mk_and(std::vector<Term> operands) {
  if (operands.empty())
    return mk_bool(true);
  if (operands.size() == 1)
    return operands.front();
  return mk_term(Kind::And, std::move(operands));
}

Term mk_or(std::vector<Term> operands) {
  if (operands.empty())
    return mk_bool(false);
  if (operands.size() == 1)
    return operands.front();
  return mk_term(Kind::Or, std::move(operands));
}

Term mk_implies(const Term &a, const Term &b) {
  return mk_term(Kind::Implies, {a, b});
}

Term mk_eq(const Term &a, const Term &b) {
  return mk_term(Kind::Equal, {a, b});
}

Term mk_ite(const Term &c, const Term &a, const Term &b) {
  return mk_term(Kind::Ite, {c, a, b});
}

std::vector<Term> post_order(const Term &root) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  // (term, children expanded?)
  std::vector<std::pair<Term, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      if (seen.insert(t).second)
        out.push_back(t);
      continue;
    }
    if (seen.count(t))
      continue;
    stack.emplace_back(t, true);
    const auto &cs = t.children();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
      if (!seen.count(*it))
        stack.emplace_back(*it, false);
  }
  return out;
}

Term with_children(const Term &t, std::vector<Term> children) {
  switch (t.kind()) {
  case Kind::Const:
  case Kind::Var:
    return t;
  case Kind::Apply:
    return mk_apply(t.name(), std::move(children), t.sort());
  default:
    return mk_term(t.kind(), std::move(children), t.indices());
  }
}

Term rewrite_bottom_up(
    const Term &root,
    const std::function<Term(const Term &original, const Term &rebuilt)> &fn) {
  std::unordered_map<Term, Term, TermHash> done;
  for (const Term &t : post_order(root)) {
    Term rebuilt = t;
    if (t.num_children() > 0) {
      std::vector<Term> kids;
      kids.reserve(t.num_children());
      bool changed = false;
      for (const Term &c : t.children()) {
        const Term &r = done.at(c);
        changed = changed || !r.same_node(c);
        kids.push_back(r);
      }
      if (changed)
        rebuilt = with_children(t, std::move(kids));
    }
    done.emplace(t, fn(t, rebuilt));
  }
  return done.at(root);
}

std::size_t dag_size(const Term &root) { return post_order(root).size(); }

} // namespace intblast
