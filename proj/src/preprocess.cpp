#include "intblast/preprocess.hpp"

#include "intblast/errors.hpp"

namespace intblast {

namespace {

Term bvnot(const Term &a) { return mk_term(Kind::BvNot, {a}); }
Term bvand(const Term &a, const Term &b) { return mk_term(Kind::BvAnd, {a, b}); }
Term bvneg(const Term &a) { return mk_term(Kind::BvNeg, {a}); }
Term bvadd(const Term &a, const Term &b) { return mk_term(Kind::BvAdd, {a, b}); }
Term bvsub(const Term &a, const Term &b) { return mk_term(Kind::BvSub, {a, b}); }
Term bvudiv(const Term &a, const Term &b) { return mk_term(Kind::BvUdiv, {a, b}); }
Term bvurem(const Term &a, const Term &b) { return mk_term(Kind::BvUrem, {a, b}); }
Term extract(const Term &a, unsigned hi, unsigned lo) {
  return mk_term(Kind::Extract, {a}, {hi, lo});
}
Term concat(const Term &a, const Term &b) { return mk_term(Kind::Concat, {a, b}); }

Term bvor(const Term &a, const Term &b) {
  return bvnot(bvand(bvnot(a), bvnot(b)));
}

// and-bits are a subset of or-bits, so the subtraction never borrows.
Term bvxor(const Term &a, const Term &b) {
  return bvsub(bvor(a, b), bvand(a, b));
}

// Most significant bit of `a` is zero.
Term msb_clear(const Term &a) {
  unsigned k = a.sort().width();
  return mk_eq(extract(a, k - 1, k - 1), mk_bv(0, 1));
}

Term sdiv(const Term &s, const Term &t) {
  Term ps = msb_clear(s), pt = msb_clear(t);
  return mk_ite(mk_and({ps, pt}), bvudiv(s, t),
                mk_ite(mk_and({mk_not(ps), pt}), bvneg(bvudiv(bvneg(s), t)),
                       mk_ite(mk_and({ps, mk_not(pt)}), bvneg(bvudiv(s, bvneg(t))),
                              bvudiv(bvneg(s), bvneg(t)))));
}

Term srem(const Term &s, const Term &t) {
  Term ps = msb_clear(s), pt = msb_clear(t);
  return mk_ite(mk_and({ps, pt}), bvurem(s, t),
                mk_ite(mk_and({mk_not(ps), pt}), bvneg(bvurem(bvneg(s), t)),
                       mk_ite(mk_and({ps, mk_not(pt)}), bvurem(s, bvneg(t)),
                              bvneg(bvurem(bvneg(s), bvneg(t))))));
}

Term smod(const Term &s, const Term &t) {
  unsigned k = s.sort().width();
  Term ps = msb_clear(s), pt = msb_clear(t);
  Term abs_s = mk_ite(ps, s, bvneg(s));
  Term abs_t = mk_ite(pt, t, bvneg(t));
  Term u = bvurem(abs_s, abs_t);
  return mk_ite(
      mk_eq(u, mk_bv(0, k)), u,
      mk_ite(mk_and({ps, pt}), u,
             mk_ite(mk_and({mk_not(ps), pt}), bvadd(bvneg(u), t),
                    mk_ite(mk_and({ps, mk_not(pt)}), bvadd(u, t), bvneg(u)))));
}

Term ashr(const Term &a, const Term &b) {
  Term shifted = mk_term(Kind::BvLshr, {a, b});
  Term filled = bvnot(mk_term(Kind::BvLshr, {bvnot(a), b}));
  return mk_ite(msb_clear(a), shifted, filled);
}

Term rotate_left(const Term &a, unsigned amount) {
  unsigned k = a.sort().width();
  unsigned r = amount % k;
  if (r == 0)
    return a;
  return concat(extract(a, k - 1 - r, 0), extract(a, k - 1, k - r));
}

Term rotate_right(const Term &a, unsigned amount) {
  unsigned k = a.sort().width();
  unsigned r = amount % k;
  if (r == 0)
    return a;
  return concat(extract(a, r - 1, 0), extract(a, k - 1, r));
}

Term repeat(const Term &a, unsigned n) {
  Term acc = a;
  for (unsigned i = 1; i < n; ++i)
    acc = concat(acc, a);
  return acc;
}

Term distinct(const std::vector<Term> &xs) {
  std::vector<Term> neq;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      neq.push_back(mk_not(mk_eq(xs[i], xs[j])));
  return mk_and(std::move(neq));
}

Term eliminate_node(const Term &t) {
  auto c = [&](std::size_t i) -> const Term & { return t[i]; };
  switch (t.kind()) {
  case Kind::BvOr:
    return bvor(c(0), c(1));
  case Kind::BvXor:
    return bvxor(c(0), c(1));
  case Kind::BvNand:
    return bvnot(bvand(c(0), c(1)));
  case Kind::BvNor:
    return bvnot(bvor(c(0), c(1)));
  case Kind::BvXnor:
    return bvnot(bvxor(c(0), c(1)));
  case Kind::BvComp:
    return mk_ite(mk_eq(c(0), c(1)), mk_bv(1, 1), mk_bv(0, 1));
  case Kind::BvAshr:
    return ashr(c(0), c(1));
  case Kind::BvSdiv:
    return sdiv(c(0), c(1));
  case Kind::BvSrem:
    return srem(c(0), c(1));
  case Kind::BvSmod:
    return smod(c(0), c(1));
  case Kind::RotateLeft:
    return rotate_left(c(0), t.index(0));
  case Kind::RotateRight:
    return rotate_right(c(0), t.index(0));
  case Kind::Repeat:
    return repeat(c(0), t.index(0));
  case Kind::BvUgt:
    return mk_term(Kind::BvUlt, {c(1), c(0)});
  case Kind::BvUge:
    return mk_term(Kind::BvUle, {c(1), c(0)});
  case Kind::BvSgt:
    return mk_term(Kind::BvSlt, {c(1), c(0)});
  case Kind::BvSge:
    return mk_term(Kind::BvSle, {c(1), c(0)});
  case Kind::Distinct:
    return distinct(t.children());
  default:
    return t;
  }
}

} // namespace

bool is_core_kind(Kind kind) {
  switch (kind) {
  case Kind::Const:
  case Kind::Var:
  case Kind::Not:
  case Kind::And:
  case Kind::Or:
  case Kind::Xor:
  case Kind::Implies:
  case Kind::Equal:
  case Kind::Ite:
  case Kind::BvAdd:
  case Kind::BvSub:
  case Kind::BvNeg:
  case Kind::BvMul:
  case Kind::BvUdiv:
  case Kind::BvUrem:
  case Kind::BvNot:
  case Kind::BvAnd:
  case Kind::BvShl:
  case Kind::BvLshr:
  case Kind::Concat:
  case Kind::Extract:
  case Kind::ZeroExtend:
  case Kind::SignExtend:
  case Kind::BvUlt:
  case Kind::BvUle:
  case Kind::BvSlt:
  case Kind::BvSle:
    return true;
  default:
    return false;
  }
}

Term eliminate_derived_ops(const Term &t) {
  return rewrite_bottom_up(t, [](const Term &orig, const Term &rebuilt) {
    if (orig.kind() == Kind::Apply || orig.sort().is_int())
      throw SortError("preprocessing expects a QF_BV term");
    return eliminate_node(rebuilt);
  });
}

std::map<std::string, std::size_t> count_core_ops(const Term &t) {
  std::map<std::string, std::size_t> census;
  for (const Term &s : post_order(t)) {
    if (s.kind() == Kind::Const || s.kind() == Kind::Var)
      continue;
    std::string key = s.kind() == Kind::Apply ? s.name()
                                              : std::string(kind_symbol(s.kind()));
    ++census[key];
  }
  return census;
}

} // namespace intblast
