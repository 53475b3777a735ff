#include "helpers.hpp"

#include "exhaustive.hpp"
#include "intblast/arith.hpp"
#include "intblast/errors.hpp"
#include "intblast/lemmas.hpp"
#include "intblast/printer.hpp"
#include "intblast/translate.hpp"

using namespace intblast;
using test::bv;

namespace {

TranslationMap map_with(Kind k, unsigned w) {
  TranslationMap tm;
  translate_term(mk_term(k, {bv("x", w), bv("y", w)}), tm);
  return tm;
}

} // namespace

TEST(Lemmas, BaseBatchSizes) {
  EXPECT_EQ(base_lemmas(map_with(Kind::BvAnd, 4), 0).size(), 9u);
  EXPECT_EQ(base_lemmas(map_with(Kind::BvShl, 4), 0).size(), 3u);
  EXPECT_EQ(base_lemmas(map_with(Kind::BvLshr, 4), 0).size(), 3u);
  for (const Lemma &l : base_lemmas(map_with(Kind::BvAnd, 2), 0)) {
    EXPECT_EQ(l.tier, LemmaTier::Base);
    EXPECT_EQ(l.source, std::optional<std::size_t>(0));
  }
}

TEST(Lemmas, InstanceLemmaShape) {
  TranslationMap tm = map_with(Kind::BvAnd, 3);
  Lemma l = instance_lemma(tm, 0, 6, 3);
  EXPECT_EQ(l.tier, LemmaTier::Instance);
  EXPECT_EQ(to_smtlib(l.formula),
            "(=> (and (= x!0 6) (= y!0 3)) (= (bvand_3 x!0 y!0) 2))");
}

TEST(Lemmas, ShiftInstanceBeyondWidth) {
  TranslationMap tm = map_with(Kind::BvShl, 3);
  Lemma l = instance_lemma(tm, 0, 5, 7);
  EXPECT_EQ(to_smtlib(l.formula),
            "(=> (and (= x!0 5) (= y!0 7)) (= (bvshl_3 x!0 y!0) 0))");
}

TEST(Lemmas, ValidAtSmallWidths) {
  for (unsigned w = 1; w <= 3; ++w) {
    check::Report r = check::lemma_validity(w);
    EXPECT_TRUE(r.ok()) << "width " << w << ": " << r.first_failure;
  }
}

TEST(Lemmas, ExpansionDeterminesValue) {
  for (unsigned w = 1; w <= 3; ++w) {
    check::Report r = check::expansion_completeness(w);
    EXPECT_TRUE(r.ok()) << "width " << w << ": " << r.first_failure;
  }
}

TEST(Lemmas, BaseLemmasAloneAreIncomplete) {
  // bvand_2(1, 2) is 0, but the value 1 (both argument orders) satisfies
  // every base lemma.
  TranslationMap tm = map_with(Kind::BvAnd, 2);
  const AbstractedApp &app = tm.apps()[0];
  FunctionInterp wrong = [&](const Term &, const std::vector<Integer> &args) {
    if (args[0] + args[1] == 3 && args[0] * args[1] == 2)
      return Integer(1);
    return apply_abstract_op(AbstractOp::And, 2, args[0], args[1]);
  };
  Assignment env{{app.lhs.name(), Value::integer(1)},
                 {app.rhs.name(), Value::integer(2)}};
  bool all_hold = true;
  for (const Lemma &l : base_lemmas(tm, 0))
    all_hold &= eval_arith(l.formula, env, wrong).as_bool();
  EXPECT_TRUE(all_hold);
}

TEST(Lemmas, CoreLemma) {
  Script s = parse_script("(declare-const x (_ BitVec 2))(declare-const p Bool)"
                          "(assert (or p (= x #b01)))");
  Translation tr = translate_formula(s.formula(), s.declarations);
  Lemma l = core_lemma({{"x", 1, 2}, {"p", 1, 0}}, tr.map);
  EXPECT_EQ(l.tier, LemmaTier::UnderApproxCore);
  EXPECT_FALSE(l.source.has_value());
  EXPECT_EQ(to_smtlib(l.formula), "(or (not (= x!0 1)) (not p))");
  EXPECT_THROW(core_lemma({}, tr.map), EmptyCoreError);
}

TEST(Lemmas, TierNames) {
  EXPECT_EQ(tier_name(LemmaTier::Base), "base");
  EXPECT_EQ(tier_name(LemmaTier::Instance), "instance");
  EXPECT_EQ(tier_name(LemmaTier::FullExpansion), "expansion");
  EXPECT_EQ(tier_name(LemmaTier::UnderApproxCore), "core");
}
