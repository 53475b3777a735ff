#include "helpers.hpp"

#include "intblast/errors.hpp"
#include "intblast/solver_client.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace intblast;
using test::bv;
using test::fake_solver;

TEST(SolverCommand, SplitsOnWhitespace) {
  SolverCommand c = SolverCommand::parse("  z3  -in\t-smt2 ");
  EXPECT_EQ(c.argv, (std::vector<std::string>{"z3", "-in", "-smt2"}));
  EXPECT_TRUE(SolverCommand::parse("   ").empty());
}

TEST(SolverClient, ModelValues) {
  EXPECT_EQ(parse_model_value("#b0110"), Value::bitvec(6, 4));
  EXPECT_EQ(parse_model_value("#xff"), Value::bitvec(255, 8));
  EXPECT_EQ(parse_model_value("(_ bv3 4)"), Value::bitvec(3, 4));
  EXPECT_EQ(parse_model_value("17"), Value::integer(17));
  EXPECT_EQ(parse_model_value("(- 17)"), Value::integer(-17));
  EXPECT_EQ(parse_model_value("true"), Value::boolean(true));
  EXPECT_THROW(parse_model_value("(foo)"), BackendError);
}

TEST(SolverClient, MissingBinary) {
  EXPECT_THROW(SolverSession({{"/nonexistent/solver-binary"}}, "QF_BV"),
               SpawnError);
  EXPECT_THROW(SolverSession(SolverCommand{}, "QF_BV"), SpawnError);
}

TEST(SolverClient, GarbageReply) {
  EXPECT_THROW(SolverSession(fake_solver("garbage"), "QF_BV"), BackendError);
}

TEST(SolverClient, SolverDies) {
  EXPECT_THROW(SolverSession(fake_solver("die"), "QF_BV"), BackendError);
}

TEST(SolverClient, RejectedOption) {
  EXPECT_NO_THROW(SolverSession(fake_solver("reject-option"), "QF_BV"));
  EXPECT_THROW(SolverSession(fake_solver("reject-option"), "QF_BV", true),
               BackendError);
}

TEST(SolverClient, UnknownCoreName) {
  SolverSession s(fake_solver("unknown-core"), "QF_BV", true);
  Term x = bv("x", 2);
  EXPECT_THROW(s.check_assuming({{"a0", mk_eq(x, mk_bv(1, 2))}}), BackendError);
  EXPECT_EQ(s.state(), SolverSession::State::Dead);
}

TEST(SolverClient, NegativeValuePassesThrough) {
  SolverSession s(fake_solver("negative"), "QF_NIA");
  Term a = mk_var("a", Sort::integer());
  s.assert_term(mk_term(Kind::IntLt, {a, mk_int(0)}));
  ASSERT_EQ(s.check(), CheckResult::Sat);
  EXPECT_EQ(s.get_values({a})[0], Value::integer(-3));
}

TEST(SolverClient, TimeoutKillsSolver) {
  SolverSession s(fake_solver("hang"), "QF_BV");
  auto start = Clock::now();
  EXPECT_EQ(s.check(Clock::now() + std::chrono::milliseconds(200)),
            CheckResult::Unknown);
  EXPECT_LT(Clock::now() - start, std::chrono::seconds(5));
  EXPECT_EQ(s.state(), SolverSession::State::Dead);
  EXPECT_THROW(s.check(), BackendError);
}

TEST(SolverClient, DeclaresEachSymbolOnce) {
  std::string log = ::testing::TempDir() + "intblast_fake_solver.log";
  {
    SolverSession s({{INTBLAST_PYTHON, INTBLAST_FAKE_SOLVER, "log", log}},
                    "QF_BV");
    Term x = bv("x", 2);
    s.assert_term(mk_eq(x, mk_bv(1, 2)));
    s.assert_term(mk_term(Kind::BvUlt, {x, bv("y", 2)}));
    EXPECT_EQ(s.check(), CheckResult::Unsat);
  }
  std::ifstream in(log);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "(set-option :print-success true)\n"
                        "(set-option :produce-models true)\n"
                        "(set-logic QF_BV)\n"
                        "(declare-fun x () (_ BitVec 2))\n"
                        "(assert (= x #b01))\n"
                        "(declare-fun y () (_ BitVec 2))\n"
                        "(assert (bvult x y))\n"
                        "(check-sat)\n"
                        "(exit)\n");
}

TEST(SolverClient, Z3RoundTrip) {
  REQUIRE_Z3();
  SolverSession s(test::z3_command(), "QF_UFNIA");
  Term a = mk_var("a", Sort::integer());
  Term f = mk_apply("f", {a, a}, Sort::integer());
  s.assert_term(mk_and({mk_eq(mk_term(Kind::IntMul, {a, a}), mk_int(9)),
                        mk_term(Kind::IntGt, {a, mk_int(0)}),
                        mk_eq(f, mk_int(3))}));
  ASSERT_EQ(s.check(), CheckResult::Sat);
  std::vector<Value> v = s.get_values({a, f});
  EXPECT_EQ(v[0], Value::integer(3));
  EXPECT_EQ(v[1], Value::integer(3));
}

TEST(SolverClient, Z3Assumptions) {
  REQUIRE_Z3();
  SolverSession s(test::z3_command(), "QF_BV", true);
  Term x = bv("x", 4), y = bv("y", 4);
  s.assert_term(mk_term(Kind::BvUlt, {x, y}));
  AssumptionCheck r = s.check_assuming({{"p0", mk_eq(y, mk_bv(0, 4))},
                                        {"p1", mk_eq(x, mk_bv(3, 4))}});
  ASSERT_EQ(r.result, CheckResult::Unsat);
  EXPECT_NE(std::find(r.core.begin(), r.core.end(), "p0"), r.core.end());
  AssumptionCheck r2 = s.check_assuming({{"p2", mk_eq(y, mk_bv(5, 4))}});
  EXPECT_EQ(r2.result, CheckResult::Sat);
  EXPECT_EQ(s.get_values({y})[0], Value::bitvec(5, 4));
}
