#include "helpers.hpp"

#include "intblast/errors.hpp"
#include "intblast/printer.hpp"
#include "intblast/sexpr.hpp"

#include <sstream>

using namespace intblast;
using test::bv;

TEST(SExpr, TokensAndPositions) {
  auto xs = parse_sexprs("; note\n(a |b c| #b01 #xF \"s\"\"t\" 12)");
  ASSERT_EQ(xs.size(), 1u);
  const SExpr &l = xs[0];
  ASSERT_EQ(l.items.size(), 6u);
  EXPECT_EQ(l.line, 2u);
  EXPECT_EQ(l.items[1].text, "b c");
  EXPECT_TRUE(l.items[1].quoted);
  EXPECT_EQ(l.items[2].type, SExpr::Type::Binary);
  EXPECT_EQ(l.items[3].type, SExpr::Type::Hex);
  EXPECT_EQ(l.items[4].text, "s\"t");
  EXPECT_EQ(l.items[5].type, SExpr::Type::Numeral);
}

TEST(SExpr, Errors) {
  EXPECT_THROW(parse_sexprs("(a"), ParseError);
  EXPECT_THROW(parse_sexprs(")"), ParseError);
  EXPECT_THROW(parse_sexprs("#b"), ParseError);
  EXPECT_THROW(parse_sexprs("#b012"), ParseError);
  EXPECT_THROW(parse_sexprs("007"), ParseError);
  try {
    parse_sexprs("(a\n  |b");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Frontend, ParsesDeclarationsAndAssertions) {
  Script s = parse_script("(set-logic QF_BV)\n"
                          "(declare-const x (_ BitVec 4))\n"
                          "(declare-fun y () (_ BitVec 4))\n"
                          "(assert (= (bvadd x y) #x3))\n"
                          "(check-sat)\n(get-model)\n(exit)\n");
  EXPECT_EQ(s.logic, "QF_BV");
  ASSERT_EQ(s.declarations.size(), 2u);
  EXPECT_EQ(s.declarations[1].name, "y");
  ASSERT_EQ(s.assertions.size(), 1u);
  EXPECT_EQ(to_smtlib(s.assertions[0]), "(= (bvadd x y) #b0011)");
  EXPECT_TRUE(s.has_check_sat);
  EXPECT_TRUE(s.wants_model);
}

TEST(Frontend, NaryAndChainableOperators) {
  SymbolTable st;
  st.add(bv("x", 2));
  st.add(bv("y", 2));
  st.add(bv("z", 2));
  EXPECT_EQ(to_smtlib(parse_term("(bvadd x y z)", st)),
            "(bvadd (bvadd x y) z)");
  EXPECT_EQ(to_smtlib(parse_term("(= x y z)", st)), "(and (= x y) (= y z))");
  EXPECT_THROW(parse_term("(bvult x y z)", st), SortError);
  EXPECT_EQ(to_smtlib(parse_term("(concat x y z)", st)),
            "(concat (concat x y) z)");
}

TEST(Frontend, IndexedAndLiteralForms) {
  SymbolTable st;
  st.add(bv("x", 4));
  EXPECT_EQ(parse_term("(_ bv5 4)", st), mk_bv(5, 4));
  EXPECT_EQ(to_smtlib(parse_term("((_ zero_extend 2) x)", st)),
            "((_ zero_extend 2) x)");
  EXPECT_EQ(parse_term("((_ extract 1 0) x)", st).sort(), Sort::bitvec(2));
  EXPECT_THROW(parse_term("(_ bv16 4)", st), SortError);
}

TEST(Frontend, LetIsParallelAndInlined) {
  SymbolTable st;
  st.add(bv("x", 2));
  st.add(bv("y", 2));
  Term t = parse_term("(let ((x y) (y x)) (bvsub x y))", st);
  EXPECT_EQ(to_smtlib(t), "(bvsub y x)");
}

TEST(Frontend, AnnotationsAreDropped) {
  Script s = parse_script("(declare-const p Bool)(assert (! p :named a1))");
  EXPECT_EQ(to_smtlib(s.assertions[0]), "p");
}

TEST(Frontend, DefineFunExpansion) {
  Script s = parse_script(
      "(declare-const x (_ BitVec 3))"
      "(define-fun inc ((a (_ BitVec 3))) (_ BitVec 3) (bvadd a #b001))"
      "(define-fun two () (_ BitVec 3) (inc (inc #b000)))"
      "(assert (= (inc x) two))");
  Script e = expand_defines(s);
  EXPECT_TRUE(e.definitions.empty());
  EXPECT_EQ(to_smtlib(e.assertions[0]),
            "(= (bvadd x #b001) (bvadd (bvadd #b000 #b001) #b001))");
}

TEST(Frontend, RecursiveDefinitionRejected) {
  Script s = parse_script(
      "(define-fun f ((a (_ BitVec 3))) (_ BitVec 3) (f a))"
      "(declare-const x (_ BitVec 3))(assert (= (f x) x))");
  EXPECT_THROW(expand_defines(s), RecursionError);
}

TEST(Frontend, Errors) {
  EXPECT_THROW(parse_script("(assert (= y y))"), ParseError);
  EXPECT_THROW(parse_script("(declare-const x (_ BitVec 2))(assert x)"),
               SortError);
  EXPECT_THROW(parse_script("(declare-const x (_ BitVec 2))"
                            "(assert (= x (bvfoo x)))"),
               UnsupportedError);
  EXPECT_THROW(parse_script("(declare-const x (_ BitVec 2))"
                            "(assert (forall ((y (_ BitVec 2))) (= x y)))"),
               UnsupportedError);
  EXPECT_THROW(parse_script("(push 1)"), UnsupportedError);
  EXPECT_THROW(parse_script("(check-sat)(assert true)"), UnsupportedError);
  EXPECT_THROW(parse_script("(get-model)"), UnsupportedError);
  EXPECT_THROW(parse_script("(declare-fun f ((_ BitVec 2)) (_ BitVec 2))"),
               UnsupportedError);
  EXPECT_THROW(parse_script("(declare-const x Bool)(declare-const x Bool)"),
               ParseError);
}

TEST(Frontend, ParseErrorCarriesPosition) {
  try {
    parse_script("(declare-const x (_ BitVec 2))\n(assert (= x  zz))");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 15u);
  }
}

TEST(Frontend, IntegerUfScriptsParse) {
  Script s = parse_script("(set-logic QF_UFNIA)"
                          "(declare-fun f (Int Int) Int)"
                          "(declare-const a Int)"
                          "(assert (and (<= 0 a) (= (f a a) (- (* a 2) 1))))");
  EXPECT_TRUE(s.is_integer_problem());
  EXPECT_TRUE(s.declarations[0].is_function());
}

TEST(Frontend, PrintedScriptReparses) {
  const char *text = "(set-logic QF_BV)"
                     "(declare-const |odd name| (_ BitVec 4))"
                     "(declare-const p Bool)"
                     "(assert (or p (bvslt |odd name| ((_ sign_extend 2) "
                     "((_ extract 1 0) |odd name|)))))";
  Script s = parse_script(text);
  std::ostringstream os;
  print_script(os, s);
  Script again = parse_script(os.str());
  ASSERT_EQ(again.assertions.size(), 1u);
  EXPECT_EQ(again.assertions[0], s.assertions[0]);
  EXPECT_EQ(again.declarations.size(), 2u);
}
