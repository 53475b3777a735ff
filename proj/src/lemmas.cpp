#include "intblast/lemmas.hpp"

#include "intblast/errors.hpp"

namespace intblast {

namespace {

Term num(const Integer &v) { return mk_int(v); }
Term le(const Term &a, const Term &b) { return mk_term(Kind::IntLe, {a, b}); }
Term ge(const Term &a, const Term &b) { return mk_term(Kind::IntGe, {a, b}); }
Term eq(const Term &a, const Term &b) { return mk_eq(a, b); }
Term implies(const Term &a, const Term &b) { return mk_implies(a, b); }
Term imod(const Term &a, const Term &b) { return mk_term(Kind::IntMod, {a, b}); }
Term idiv(const Term &a, const Term &b) { return mk_term(Kind::IntDiv, {a, b}); }
Term mul(const Term &a, const Term &b) { return mk_term(Kind::IntMul, {a, b}); }

// (x div 2^i) mod 2 = 1
Term bit_set(const Term &x, unsigned i) {
  return eq(imod(idiv(x, num(pow2(i))), num(2)), num(1));
}

const AbstractedApp &app_at(const TranslationMap &tm, std::size_t app) {
  if (app >= tm.apps().size())
    throw InternalError("unknown abstracted application " + std::to_string(app));
  return tm.apps()[app];
}

Term shift_ladder(const AbstractedApp &a) {
  const unsigned k = a.width;
  Term acc = num(0);
  for (unsigned i = k; i-- > 0;) {
    Term shifted = a.op == AbstractOp::Shl
                       ? (i == 0 ? a.lhs : imod(mul(a.lhs, num(pow2(i))), num(pow2(k))))
                       : (i == 0 ? a.lhs : idiv(a.lhs, num(pow2(i))));
    acc = mk_ite(eq(a.rhs, num(i)), shifted, acc);
  }
  return acc;
}

} // namespace

std::string_view tier_name(LemmaTier tier) {
  switch (tier) {
  case LemmaTier::Base:
    return "base";
  case LemmaTier::Instance:
    return "instance";
  case LemmaTier::FullExpansion:
    return "expansion";
  case LemmaTier::UnderApproxCore:
    return "core";
  }
  return {};
}

std::vector<Lemma> base_lemmas(const TranslationMap &tm, std::size_t app) {
  const AbstractedApp &a = app_at(tm, app);
  const Term &x = a.lhs;
  const Term &y = a.rhs;
  const Term &f = a.app_term;
  const unsigned k = a.width;
  const Term zero = num(0);
  const Term ones = num(mask(k));
  std::vector<Term> facts;

  switch (a.op) {
  case AbstractOp::And: {
    Term swapped = mk_apply(f.name(), {y, x}, Sort::integer());
    facts = {
        eq(f, swapped),
        le(f, x),
        le(f, y),
        implies(eq(x, zero), eq(f, zero)),
        implies(eq(y, zero), eq(f, zero)),
        implies(eq(x, ones), eq(f, y)),
        implies(eq(y, ones), eq(f, x)),
        implies(eq(x, y), eq(f, x)),
        le(mk_term(Kind::IntSub, {mk_term(Kind::IntAdd, {x, y}), f}), ones),
    };
    break;
  }
  case AbstractOp::Shl:
    facts = {
        implies(eq(y, zero), eq(f, x)),
        implies(ge(y, num(k)), eq(f, zero)),
        implies(eq(x, zero), eq(f, zero)),
    };
    break;
  case AbstractOp::Lshr:
    facts = {
        implies(eq(y, zero), eq(f, x)),
        implies(ge(y, num(k)), eq(f, zero)),
        le(f, x),
    };
    break;
  }

  std::vector<Lemma> out;
  out.reserve(facts.size());
  for (Term &t : facts)
    out.push_back({std::move(t), LemmaTier::Base, app});
  return out;
}

Lemma instance_lemma(const TranslationMap &tm, std::size_t app,
                     const Integer &a, const Integer &b) {
  const AbstractedApp &ap = app_at(tm, app);
  if (a < 0 || b < 0 || a > mask(ap.width) || b > mask(ap.width))
    throw RangeError("instance arguments outside [0, 2^" +
                     std::to_string(ap.width) + ")");
  Integer result = apply_abstract_op(ap.op, ap.width, a, b);
  Term guard = mk_and({eq(ap.lhs, num(a)), eq(ap.rhs, num(b))});
  return {implies(guard, eq(ap.app_term, num(result))), LemmaTier::Instance, app};
}

Lemma full_expansion(const TranslationMap &tm, std::size_t app) {
  const AbstractedApp &a = app_at(tm, app);
  Term definition;
  if (a.op == AbstractOp::And) {
    Term sum;
    for (unsigned i = 0; i < a.width; ++i) {
      Term bit = mk_ite(mk_and({bit_set(a.lhs, i), bit_set(a.rhs, i)}), num(1),
                        num(0));
      Term term = i == 0 ? bit : mul(num(pow2(i)), bit);
      sum = i == 0 ? term : mk_term(Kind::IntAdd, {sum, term});
    }
    definition = sum;
  } else {
    definition = shift_ladder(a);
  }
  return {eq(a.app_term, definition), LemmaTier::FullExpansion, app};
}

Lemma core_lemma(const std::vector<CoreAssumption> &core,
                 const TranslationMap &tm) {
  if (core.empty())
    throw EmptyCoreError("under-approximation core is empty");
  std::vector<Term> clause;
  for (const CoreAssumption &c : core) {
    const TranslatedVar *tv = tm.find_var(c.var);
    if (!tv)
      throw InternalError("core mentions unknown variable '" + c.var + "'");
    if (tv->width != c.width)
      throw InternalError("core width mismatch for '" + c.var + "'");
    if (c.width == 0) {
      clause.push_back(c.value != 0 ? mk_not(tv->translated) : tv->translated);
    } else {
      if (c.value < 0 || c.value > mask(c.width))
        throw RangeError("core value out of range for '" + c.var + "'");
      clause.push_back(mk_not(eq(tv->translated, num(c.value))));
    }
  }
  return {mk_or(std::move(clause)), LemmaTier::UnderApproxCore, std::nullopt};
}

} // namespace intblast
