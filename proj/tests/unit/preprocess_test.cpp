#include "helpers.hpp"

#include "exhaustive.hpp"
#include "intblast/errors.hpp"
#include "intblast/oracle.hpp"
#include "intblast/preprocess.hpp"
#include "intblast/printer.hpp"

using namespace intblast;
using test::bv;

TEST(Preprocess, CoreOperatorsAreKept) {
  for (Kind k : check::core_kinds())
    EXPECT_TRUE(is_core_kind(k)) << kind_symbol(k);
  for (Kind k : check::derived_kinds())
    EXPECT_FALSE(is_core_kind(k)) << kind_symbol(k);
}

TEST(Preprocess, OrBecomesDeMorgan) {
  Term t = mk_term(Kind::BvOr, {bv("x", 2), bv("y", 2)});
  EXPECT_EQ(to_smtlib(eliminate_derived_ops(t)),
            "(bvnot (bvand (bvnot x) (bvnot y)))");
}

TEST(Preprocess, SwappedComparisons) {
  Term t = mk_term(Kind::BvUgt, {bv("x", 2), bv("y", 2)});
  EXPECT_EQ(to_smtlib(eliminate_derived_ops(t)), "(bvult y x)");
}

TEST(Preprocess, CoreFormulaUnchanged) {
  Term t = mk_term(Kind::BvUlt, {mk_term(Kind::BvAnd, {bv("x", 2), bv("y", 2)}),
                                 bv("x", 2)});
  EXPECT_EQ(eliminate_derived_ops(t), t);
}

TEST(Preprocess, SoundAtSmallWidths) {
  for (unsigned w = 1; w <= 3; ++w) {
    check::Report r = check::rewrite_soundness(w);
    EXPECT_TRUE(r.ok()) << "width " << w << ": " << r.first_failure;
  }
}

TEST(Preprocess, NestedDerivedOperators) {
  Term x = bv("x", 3), y = bv("y", 3);
  Term t = mk_term(Kind::BvSmod,
                   {mk_term(Kind::BvXor, {x, y}),
                    mk_term(Kind::RotateLeft, {mk_term(Kind::BvAshr, {y, x})},
                            {2})});
  Term r = eliminate_derived_ops(t);
  for (const Term &s : post_order(r))
    EXPECT_TRUE(s.is_var() || s.is_const() || is_core_kind(s.kind()))
        << kind_symbol(s.kind());
  EXPECT_TRUE(oracle::check_equiv(t, r).equivalent);
}

TEST(Preprocess, CountsDistinctSubterms) {
  Term x = bv("x", 2);
  Term a = mk_term(Kind::BvAnd, {x, x});
  Term t = mk_eq(mk_term(Kind::BvAdd, {a, a}), mk_term(Kind::BvAnd, {a, x}));
  auto counts = count_core_ops(t);
  EXPECT_EQ(counts["bvand"], 2u);
  EXPECT_EQ(counts["bvadd"], 1u);
  EXPECT_EQ(counts["="], 1u);
  EXPECT_EQ(counts.count("x"), 0u);
}

TEST(Preprocess, RejectsIntegerTerms) {
  Term t = mk_term(Kind::IntLt, {mk_var("a", Sort::integer()), mk_int(3)});
  EXPECT_THROW(eliminate_derived_ops(t), SortError);
}
