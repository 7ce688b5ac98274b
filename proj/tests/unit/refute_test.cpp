#include <gtest/gtest.h>

#include <random>

#include "generator.h"
#include "helpers.h"
#include "random_constraints.h"
#include "refutelint/refute/refute.h"
#include "sym_oracle.h"

using namespace refutelint;
using namespace refutelint::refute;
using namespace refutelint::ir;
using Kind = PathConstraint::Kind;

namespace {

reports::BugReport parityReport(testutil::Explored& keep) {
  keep = testutil::explore(testutil::paritySource(), "func");
  return reports::makeReports(keep.graph, "main.c").at(0);
}

std::vector<PathConstraint> fromFormula(const smt::SmtFormula& phi) {
  std::vector<PathConstraint> out;
  for (const auto& a : phi.assertions()) {
    switch (a.kind) {
      case smt::Assertion::Kind::Equal: out.push_back(PathConstraint::range(a.var, Interval::point(a.lower))); break;
      case smt::Assertion::Kind::Range: out.push_back(PathConstraint::range(a.var, Interval(a.lower, a.upper))); break;
      case smt::Assertion::Kind::Condition: out.push_back(PathConstraint::opaque(a.cond, a.truth)); break;
    }
  }
  return out;
}

}  // namespace

TEST(CollectConstraints, ParityLastNodeFirst) {
  testutil::Explored e;
  const auto rep = parityReport(e);
  const auto cs = collectConstraints(rep);
  ASSERT_FALSE(cs.empty());
  // The epsilon node carries both guards; its constraints come first.
  const auto& last = rep.path.back()->state;
  ASSERT_GE(cs.size(), last.constraints.size() + last.opaque.size());
  std::size_t opaque_first = 0;
  for (std::size_t i = 0; i < last.constraints.size() + last.opaque.size(); ++i)
    opaque_first += cs[i].kind == Kind::Opaque;
  EXPECT_EQ(opaque_first, 2u);
  // Every opaque condition is one of the two guards, taken true.
  for (const auto& c : cs)
    if (c.kind == Kind::Opaque) {
      EXPECT_TRUE(c.truth);
      const auto s = toString(c.cond);
      EXPECT_TRUE(s == "(ne (and $0 1:32) 0:32)" || s == "(ne (xor (and $0 1:32) 1:32) 0:32)") << s;
    }
  // Total equals the sum over nodes.
  std::size_t total = 0;
  for (const auto& n : rep.path) total += n->state.constraints.size() + n->state.opaque.size();
  EXPECT_EQ(cs.size(), total);
}

TEST(CollectConstraints, NoAssumesGivesOnlyRanges) {
  const auto e = testutil::explore("int f(int *p) { return *p; }", "f");
  const auto reps = reports::makeReports(e.graph, "t.c");
  ASSERT_EQ(reps.size(), 1u);
  for (const auto& c : collectConstraints(reps[0])) EXPECT_EQ(c.kind, Kind::Range);
}

TEST(CollectConstraints, SameSymbolAtSeveralNodes) {
  const auto e = testutil::explore("int f(int a) { int *p = 0; if (a > 3) return *p; return 10 / a; }", "f");
  const auto reps = reports::makeReports(e.graph, "t.c");
  ASSERT_EQ(reps.size(), 2u);
  const auto cs = collectConstraints(reps[0]);
  int on_a = 0;
  for (const auto& c : cs) on_a += c.kind == Kind::Range && toString(c.var) == "$0";
  EXPECT_GE(on_a, 2);
  // Only the tightest, nearest occurrence is encoded.
  const auto phi = encodeReport(reps[0]);
  ASSERT_EQ(phi.assertions().size(), 1u);
  EXPECT_EQ(smt::encodeAssertion(phi.assertions()[0]),
            "(and (bvuge $0 (_ bv4 32)) (bvule $0 (_ bv2147483647 32)))");
}

TEST(EncodeConstraint, Examples) {
  SymbolFactory f;
  const auto a = mkSym(f.make(32, Signedness::Signed, "a"));
  smt::SmtFormula phi;
  encodeConstraint({}, phi);
  EXPECT_TRUE(phi.empty());

  encodeConstraint({PathConstraint::range(a, Interval::point({32, 5}))}, phi);
  ASSERT_EQ(phi.assertions().size(), 1u);
  EXPECT_EQ(phi.assertions()[0].kind, smt::Assertion::Kind::Equal);
  EXPECT_EQ(smt::encodeAssertion(phi.assertions()[0]), "(= $0 (_ bv5 32))");

  // A second, wider interval on the same expression is skipped.
  encodeConstraint({PathConstraint::range(a, Interval({32, 0}, {32, 9}))}, phi);
  EXPECT_EQ(phi.assertions().size(), 1u);

  const auto cond = mkBinary(BinaryOp::And, a, mkConst(32, 1));
  encodeConstraint({PathConstraint::opaque(mkBinary(BinaryOp::Ne, cond, mkConst(32, 0)), false),
                    PathConstraint::opaque(mkBinary(BinaryOp::Ne, cond, mkConst(32, 0)), false)},
                   phi);
  EXPECT_EQ(phi.assertions().size(), 2u);
  EXPECT_EQ(smt::encodeAssertion(phi.assertions()[1]), "(not (not (= (bvand $0 (_ bv1 32)) (_ bv0 32))))");

  smt::SmtFormula keep;
  encodeConstraint({PathConstraint::range(a, Interval::point({32, 5})), PathConstraint::range(a, Interval({32, 0}, {32, 9}))},
                   keep, false);
  EXPECT_EQ(keep.assertions().size(), 2u);
  EXPECT_EQ(smt::encodeAssertion(keep.assertions()[1]),
            "(and (bvuge $0 (_ bv0 32)) (bvule $0 (_ bv9 32)))");
}

TEST(RefuteReport, ParityIsRefuted) {
  testutil::Explored e;
  const auto rep = parityReport(e);
  const auto r = refuteReport(rep, smt::SolverBackend::builtin());
  EXPECT_EQ(r.status, reports::ReportStatus::Refuted);
  EXPECT_TRUE(r.verdict.isUnsat());
  EXPECT_GE(r.seconds, 0);
}

TEST(RefuteReport, FeasibleReportIsConfirmed) {
  const auto e = testutil::explore("int f(int a) { int *p = 0; if (a > 3) return *p; return 10 / a; }", "f");
  for (const auto& rep : reports::makeReports(e.graph, "t.c")) {
    // All 32 bits of `a` are observable, beyond the builtin budget.
    const auto r = refuteReport(rep, smt::SolverBackend::builtin());
    EXPECT_EQ(r.status, reports::ReportStatus::Confirmed);
    EXPECT_EQ(r.verdict.reason, smt::SolverVerdict::Reason::OverBudget);
    const std::string solver = testutil::externalSolver();
    if (solver.empty()) continue;
    const auto x = refuteReport(rep, smt::SolverBackend::external(solver));
    EXPECT_EQ(x.status, reports::ReportStatus::Confirmed);
    EXPECT_TRUE(x.verdict.isSat());
  }
}

TEST(RefuteReport, TimeoutKeepsReport) {
  testutil::Explored e;
  const auto rep = parityReport(e);
  auto backend = smt::SolverBackend::external("sleep 30");
  backend.timeout = std::chrono::milliseconds(200);
  const auto r = refuteReport(rep, backend);
  EXPECT_EQ(r.status, reports::ReportStatus::Confirmed);
  EXPECT_TRUE(r.verdict.isUnknown());
  EXPECT_EQ(r.verdict.reason, smt::SolverVerdict::Reason::Timeout);
  EXPECT_LT(r.seconds, 5);
}

TEST(RefuteReport, Idempotent) {
  testutil::Explored e;
  const auto rep = parityReport(e);
  const auto a = refuteReport(rep, smt::SolverBackend::builtin());
  const auto b = refuteReport(rep, smt::SolverBackend::builtin());
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.verdict.str(), b.verdict.str());
  EXPECT_EQ(smt::emitSmtLib(encodeReport(rep)), smt::emitSmtLib(encodeReport(rep)));
}

TEST(EncodeConstraint, SkipPreservesSatisfiabilityOnEnginePaths) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    const auto prog = oracle::generateProgram(rng);
    const auto e = testutil::explore(prog.source, "f");
    for (const auto& rep : reports::makeReports(e.graph, "g.c")) {
      const auto cs = collectConstraints(rep);
      smt::SmtFormula on, off;
      encodeConstraint(cs, on, true);
      encodeConstraint(cs, off, false);
      const auto truth = oracle::satisfiable(cs, 16);
      if (!truth) continue;
      ASSERT_EQ(*oracle::satisfiable(fromFormula(on), 16), *truth) << prog.source;
      ASSERT_EQ(*oracle::satisfiable(fromFormula(off), 16), *truth) << prog.source;
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(EncodeConstraint, BackwardWalksMatchOracle) {
  std::mt19937_64 rng(5);
  const auto syms = oracle::makeSymbols(2);
  for (int i = 0; i < 200; ++i) {
    const auto cs = oracle::randomBackwardWalk(rng, syms, 1 + rng() % 5);
    smt::SmtFormula phi;
    encodeConstraint(cs, phi);
    ASSERT_EQ(*oracle::satisfiable(fromFormula(phi), 16), *oracle::satisfiable(cs, 16));
    ASSERT_EQ(smt::checkSatBuiltin(phi).isSat(), *oracle::satisfiable(cs, 16));
  }
}
