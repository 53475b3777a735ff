#include "exhaustive.hpp"

#include "intblast/arith.hpp"
#include "intblast/integer.hpp"
#include "intblast/lemmas.hpp"
#include "intblast/oracle.hpp"
#include "intblast/preprocess.hpp"
#include "intblast/printer.hpp"
#include "intblast/translate.hpp"

#include <algorithm>

namespace intblast::check {

namespace {

Term var(const char *name, unsigned w) { return mk_var(name, Sort::bitvec(w)); }

std::string show(const Term &t, const Assignment &a) {
  std::string s = to_smtlib(t) + " at";
  for (const auto &[k, v] : a)
    s += " " + k + "=" + v.to_smtlib();
  return s;
}

const std::vector<Kind> kBinaryPredicates = {
    Kind::BvUlt, Kind::BvUle, Kind::BvUgt, Kind::BvUge,
    Kind::BvSlt, Kind::BvSle, Kind::BvSgt, Kind::BvSge};

} // namespace

const std::vector<Kind> &derived_kinds() {
  static const std::vector<Kind> kinds = {
      Kind::BvOr,       Kind::BvXor,       Kind::BvNand, Kind::BvNor,
      Kind::BvXnor,     Kind::BvComp,      Kind::BvAshr, Kind::BvSdiv,
      Kind::BvSrem,     Kind::BvSmod,      Kind::RotateLeft,
      Kind::RotateRight, Kind::Repeat,     Kind::BvUgt,  Kind::BvUge,
      Kind::BvSgt,      Kind::BvSge,       Kind::Distinct};
  return kinds;
}

const std::vector<Kind> &core_kinds() {
  static const std::vector<Kind> kinds = {
      Kind::BvAdd,   Kind::BvSub,      Kind::BvNeg,      Kind::BvMul,
      Kind::BvUdiv,  Kind::BvUrem,     Kind::BvNot,      Kind::BvAnd,
      Kind::BvShl,   Kind::BvLshr,     Kind::Concat,     Kind::Extract,
      Kind::ZeroExtend, Kind::SignExtend, Kind::BvUlt,   Kind::BvUle,
      Kind::BvSlt,   Kind::BvSle,      Kind::Equal,      Kind::Ite};
  return kinds;
}

std::vector<Term> operator_instances(Kind kind, unsigned w) {
  Term x = var("x", w), y = var("y", w);
  std::vector<Term> out;
  switch (kind) {
  case Kind::BvNeg:
  case Kind::BvNot:
    out.push_back(mk_term(kind, {x}));
    break;
  case Kind::Extract:
    for (unsigned hi = 0; hi < w; ++hi)
      for (unsigned lo = 0; lo <= hi; ++lo)
        out.push_back(mk_term(kind, {x}, {hi, lo}));
    break;
  case Kind::ZeroExtend:
  case Kind::SignExtend:
  case Kind::RotateLeft:
  case Kind::RotateRight:
    for (unsigned n = 0; n <= w + 1; ++n)
      out.push_back(mk_term(kind, {x}, {n}));
    break;
  case Kind::Repeat:
    for (unsigned n = 1; n <= 3; ++n)
      out.push_back(mk_term(kind, {x}, {n}));
    break;
  case Kind::Concat:
    for (unsigned v = 1; v <= 4; ++v)
      out.push_back(mk_term(kind, {x, var("y", v)}));
    break;
  case Kind::Ite:
    out.push_back(mk_ite(mk_var("c", Sort::boolean()), x, y));
    break;
  case Kind::Distinct:
    out.push_back(mk_term(kind, {x, y}));
    out.push_back(mk_term(kind, {x, y, var("z", w)}));
    break;
  default:
    out.push_back(mk_term(kind, {x, y}));
    break;
  }
  return out;
}

Report rewrite_soundness(unsigned w) {
  Report r;
  for (Kind k : derived_kinds()) {
    for (const Term &t : operator_instances(k, w)) {
      Term rewritten = eliminate_derived_ops(t);
      for (const Term &s : post_order(rewritten))
        if (!is_core_kind(s.kind()) && !s.is_var() && !s.is_const())
          r.fail("non-core operator left in " + to_smtlib(rewritten));
      oracle::for_each_assignment(oracle::free_variables(t),
                                  [&](const Assignment &a) {
                                    ++r.checked;
                                    if (!(oracle::eval(t, a) ==
                                          oracle::eval(rewritten, a)))
                                      r.fail(show(t, a));
                                    return true;
                                  });
    }
  }
  return r;
}

Report translation_homomorphism(unsigned w) {
  Report r;
  for (Kind k : core_kinds()) {
    for (const Term &t : operator_instances(k, w)) {
      TranslationMap tm;
      Term translated = translate_term(t, tm);
      FunctionInterp interp = true_bv_interp(tm);
      oracle::for_each_assignment(
          oracle::free_variables(t), [&](const Assignment &a) {
            ++r.checked;
            Assignment env;
            for (const TranslatedVar &v : tm.vars()) {
              const Value &bv = a.at(v.original.name());
              env[v.translated.name()] =
                  v.width == 0 ? bv : Value::integer(bv.num);
            }
            Value expected = oracle::eval(t, a);
            Value got = eval_arith(translated, env, interp);
            if (expected.num != got.num)
              r.fail(show(t, a) + ": oracle " + expected.to_smtlib() +
                     ", translation " + got.to_smtlib());
            return true;
          });
    }
  }
  return r;
}

namespace {

struct AppFixture {
  TranslationMap tm;
  std::size_t app = 0;
  Term lhs, rhs; // translated x, y
};

AppFixture make_app(Kind k, unsigned w) {
  AppFixture f;
  translate_term(mk_term(k, {var("x", w), var("y", w)}), f.tm);
  f.app = 0;
  f.lhs = f.tm.apps()[0].lhs;
  f.rhs = f.tm.apps()[0].rhs;
  return f;
}

const Kind kAbstracted[] = {Kind::BvAnd, Kind::BvShl, Kind::BvLshr};

} // namespace

Report lemma_validity(unsigned w) {
  Report r;
  Integer n = pow2(w);
  for (Kind k : kAbstracted) {
    AppFixture f = make_app(k, w);
    std::vector<Lemma> lemmas = base_lemmas(f.tm, f.app);
    for (Integer a = 0; a < n; ++a)
      for (Integer b = 0; b < n; ++b)
        lemmas.push_back(instance_lemma(f.tm, f.app, a, b));
    lemmas.push_back(full_expansion(f.tm, f.app));
    FunctionInterp interp = true_bv_interp(f.tm);
    for (const Lemma &l : lemmas) {
      for (Integer x = 0; x < n; ++x) {
        for (Integer y = 0; y < n; ++y) {
          ++r.checked;
          Assignment env{{f.lhs.name(), Value::integer(x)},
                         {f.rhs.name(), Value::integer(y)}};
          if (!eval_arith(l.formula, env, interp).as_bool())
            r.fail(std::string(tier_name(l.tier)) + " lemma " +
                   to_smtlib(l.formula) + " fails at x=" + x.str() +
                   " y=" + y.str());
        }
      }
    }
  }
  return r;
}

Report expansion_completeness(unsigned w) {
  Report r;
  Integer n = pow2(w);
  for (Kind k : kAbstracted) {
    AppFixture f = make_app(k, w);
    const AbstractedApp &app = f.tm.apps()[0];
    Term axioms = mk_and({range_constraint(app.app_term, w),
                          full_expansion(f.tm, f.app).formula});
    for (Integer x = 0; x < n; ++x) {
      for (Integer y = 0; y < n; ++y) {
        Integer truth = apply_abstract_op(app.op, w, x, y);
        Assignment env{{f.lhs.name(), Value::integer(x)},
                       {f.rhs.name(), Value::integer(y)}};
        // Every candidate value for the application, in range or not.
        for (Integer z = -1; z <= n; ++z) {
          ++r.checked;
          FunctionInterp interp = [&](const Term &t,
                                      const std::vector<Integer> &args) {
            if (t == app.app_term)
              return z;
            return apply_abstract_op(app.op, w, args[0], args[1]);
          };
          if (eval_arith(axioms, env, interp).as_bool() && z != truth)
            r.fail(to_smtlib(app.origin) + " admits " + z.str() + " at x=" +
                   x.str() + " y=" + y.str());
        }
      }
    }
  }
  return r;
}

} // namespace intblast::check
