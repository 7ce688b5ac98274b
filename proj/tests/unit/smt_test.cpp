#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>

#include "helpers.h"
#include "random_constraints.h"
#include "refutelint/refute/refute.h"
#include "refutelint/smt/formula.h"
#include "refutelint/smt/solver.h"
#include "sym_oracle.h"

using namespace refutelint;
using namespace refutelint::smt;
using namespace refutelint::ir;
using namespace std::chrono_literals;

namespace {

SmtFormula parityFormula() {
  const auto e = testutil::explore(testutil::paritySource(), "func");
  const auto reps = reports::makeReports(e.graph, "main.c");
  return refute::encodeReport(reps.at(0));
}

#define REQUIRE_EXTERNAL()                                               \
  const std::string solver = testutil::externalSolver();                 \
  if (solver.empty()) GTEST_SKIP() << "no external SMT solver available"

// Top-level forms of an SMT-LIB script, by head symbol.
std::map<std::string, int> countForms(const std::string& text) {
  std::map<std::string, int> out;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      if (depth == 0) {
        std::size_t j = i + 1;
        while (j < text.size() && text[j] != ' ' && text[j] != ')') ++j;
        ++out[text.substr(i + 1, j - i - 1)];
      }
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  EXPECT_EQ(depth, 0);
  return out;
}

}  // namespace

TEST(Encode, Literals) {
  EXPECT_EQ(literal({32, 5}), "(_ bv5 32)");
  EXPECT_EQ(encodeExpr(*mkConst(64, 0)), "(_ bv0 64)");
}

TEST(Encode, Casts) {
  SymbolFactory f;
  const auto a = mkSym(f.make(32, Signedness::Unsigned, "a"));
  EXPECT_EQ(encodeExpr(*mkCast(a, 64, false)), "((_ zero_extend 32) $0)");
  EXPECT_EQ(encodeExpr(*mkCast(a, 64, true)), "((_ sign_extend 32) $0)");
  EXPECT_EQ(encodeExpr(*mkCast(a, 8, false)), "((_ extract 7 0) $0)");
}

TEST(Encode, BoolBridging) {
  SymbolFactory f;
  const auto a = mkSym(f.make(32, Signedness::Unsigned, "a"));
  const auto cmp = mkBinary(BinaryOp::Ult, a, mkConst(32, 4));
  EXPECT_EQ(encodeBool(*cmp), "(bvult $0 (_ bv4 32))");
  EXPECT_EQ(encodeBool(*a), "(not (= $0 (_ bv0 32)))");
  EXPECT_EQ(encodeExpr(*mkCast(cmp, 32, false)), "((_ zero_extend 31) (ite (bvult $0 (_ bv4 32)) #b1 #b0))");
}

TEST(Emit, EmptyFormula) { EXPECT_EQ(emitSmtLib(SmtFormula{}), "(set-logic QF_BV)\n(check-sat)\n"); }

TEST(Emit, ParityFormulaShape) {
  const auto phi = parityFormula();
  const auto text = emitSmtLib(phi);
  EXPECT_EQ(text.rfind("(set-logic QF_BV)\n(declare-fun $0 () (_ BitVec 32))\n", 0), 0u);
  EXPECT_EQ(text.substr(text.size() - 12), "(check-sat)\n");
  const auto forms = countForms(text);
  EXPECT_EQ(forms.at("declare-fun"), static_cast<int>(phi.declarations().size()));
  EXPECT_EQ(forms.at("assert"), static_cast<int>(phi.assertions().size()));
  EXPECT_EQ(text, emitSmtLib(parityFormula()));
}

TEST(Emit, DeclarationsInIdOrder) {
  SymbolFactory f;
  const auto a = mkSym(f.make(8, Signedness::Unsigned, "a"));
  const auto b = mkSym(f.make(32, Signedness::Unsigned, "b"));
  SmtFormula phi;
  phi.add(Assertion::equal(b, {32, 1}));
  phi.add(Assertion::equal(a, {8, 2}));
  EXPECT_FALSE(phi.add(Assertion::equal(a, {8, 2})));
  EXPECT_EQ(emitSmtLib(phi),
            "(set-logic QF_BV)\n(declare-fun $0 () (_ BitVec 8))\n(declare-fun $1 () (_ BitVec 32))\n"
            "(assert (= $1 (_ bv1 32)))\n(assert (= $0 (_ bv2 8)))\n(check-sat)\n");
}

TEST(Builtin, Examples) {
  EXPECT_TRUE(checkSatBuiltin(parityFormula()).isUnsat());
  SymbolFactory f;
  const auto bit = mkSym(f.make(1, Signedness::Unsigned, "b"));
  SmtFormula one;
  one.add(Assertion::equal(bit, {1, 1}));
  EXPECT_TRUE(checkSatBuiltin(one).isSat());
  EXPECT_TRUE(checkSatBuiltin(SmtFormula{}).isSat());
}

TEST(Builtin, OverBudget) {
  SymbolFactory f;
  const auto a = mkSym(f.make(32, Signedness::Unsigned, "a"));
  const auto b = mkSym(f.make(32, Signedness::Unsigned, "b"));
  const auto c = mkSym(f.make(32, Signedness::Unsigned, "c"));
  SmtFormula phi;
  phi.add(Assertion::condition(mkBinary(BinaryOp::Eq, mkBinary(BinaryOp::Add, mkBinary(BinaryOp::Add, a, b), c),
                                        mkConst(32, 7)),
                               true));
  const auto v = checkSatBuiltin(phi);
  EXPECT_TRUE(v.isUnknown());
  EXPECT_EQ(v.reason, SolverVerdict::Reason::OverBudget);
  EXPECT_EQ(v.str(), "unknown(over-budget)");
  BuiltinOptions all;
  all.demanded_bits_only = false;
  EXPECT_EQ(checkSatBuiltin(parityFormula(), all).reason, SolverVerdict::Reason::OverBudget);
}

TEST(Builtin, DemandedBitsOfParity) {
  const auto phi = parityFormula();
  const auto bits = demandedBits(phi);
  ASSERT_EQ(bits.size(), 1u);
  EXPECT_EQ(bits[0], 1u);
}

TEST(Builtin, Deadline) {
  const auto syms = oracle::makeSymbols(3);
  const auto x = mkBinary(BinaryOp::Xor, mkBinary(BinaryOp::Mul, mkSym(syms[0]), mkSym(syms[1])), mkSym(syms[2]));
  SmtFormula phi;
  phi.add(Assertion::condition(mkBinary(BinaryOp::Eq, x, mkConst(8, 1)), true));
  phi.add(Assertion::condition(mkBinary(BinaryOp::Eq, x, mkConst(8, 2)), true));
  BuiltinOptions o;
  o.deadline = std::chrono::steady_clock::now();
  const auto v = checkSatBuiltin(phi, o);
  EXPECT_EQ(v.reason, SolverVerdict::Reason::Timeout);
  EXPECT_TRUE(checkSatBuiltin(phi).isUnsat());
}

TEST(Builtin, AgreesWithEnumerationOracle) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto syms = oracle::makeSymbols(1 + static_cast<unsigned>(rng() % 2));
    const auto cs = oracle::randomConjunction(rng, syms, 4);
    // Arbitrary lists are not backward walks, so every range is kept.
    SmtFormula phi;
    refute::encodeConstraint(cs, phi, false);
    const auto v = checkSatBuiltin(phi);
    const auto truth = oracle::satisfiable(cs, 16);
    ASSERT_TRUE(truth);
    ASSERT_FALSE(v.isUnknown());
    ASSERT_EQ(v.isSat(), *truth) << emitSmtLib(phi);
  }
}

TEST(Backend, ParseValidateStr) {
  EXPECT_EQ(SolverBackend::parse("builtin").kind, SolverBackend::Kind::Builtin);
  const auto ext = SolverBackend::parse("z3 -in");
  EXPECT_EQ(ext.kind, SolverBackend::Kind::External);
  EXPECT_EQ(ext.str(), "z3 -in");
  auto b = SolverBackend::builtin();
  b.timeout = 0ms;
  EXPECT_THROW(b.validate(), std::invalid_argument);
  EXPECT_THROW(SolverBackend::builtin(25).validate(), std::invalid_argument);
}

TEST(External, ParityUnsat) {
  REQUIRE_EXTERNAL();
  EXPECT_TRUE(checkSatExternal(parityFormula(), solver, 15s).isUnsat());
}

TEST(External, PointIsSat) {
  REQUIRE_EXTERNAL();
  SymbolFactory f;
  SmtFormula phi;
  phi.add(Assertion::equal(mkSym(f.make(32, Signedness::Unsigned, "a")), {32, 5}));
  EXPECT_TRUE(checkSatExternal(phi, solver, 15s).isSat());
}

TEST(External, FileSubstitution) {
  REQUIRE_EXTERNAL();
  if (solver != "z3 -in") GTEST_SKIP() << "needs z3";
  EXPECT_TRUE(checkSatExternal(parityFormula(), "z3 -smt2 {file}", 15s).isUnsat());
}

TEST(External, MissingBinaryIsUnavailable) {
  EXPECT_THROW(checkSatExternal(SmtFormula{}, "/nonexistent/solver -in", 5s), SolverUnavailable);
}

TEST(External, TimeoutKillsProcess) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto v = checkSatExternal(SmtFormula{}, "sleep 20", 100ms);
  EXPECT_LT(std::chrono::steady_clock::now() - t0, 2s);
  EXPECT_EQ(v.reason, SolverVerdict::Reason::Timeout);
  EXPECT_EQ(v.str(), "unknown(timeout)");
}

TEST(External, ErrorsAreUnknown) {
  EXPECT_EQ(checkSatExternal(SmtFormula{}, "cat >/dev/null; exit 3", 5s).reason, SolverVerdict::Reason::SolverError);
  EXPECT_EQ(checkSatExternal(SmtFormula{}, "cat >/dev/null; echo banana", 5s).reason,
            SolverVerdict::Reason::SolverError);
  EXPECT_TRUE(checkSatExternal(SmtFormula{}, "cat >/dev/null; echo unsat", 5s).isUnsat());
}

TEST(External, ModelOfExtractForm) {
  REQUIRE_EXTERNAL();
  if (solver != "z3 -in") GTEST_SKIP() << "needs z3";
  // (a & 1) != 0 is equivalent to bit 0 of $0 being set.
  SymbolFactory f;
  const auto a = mkSym(f.make(32, Signedness::Unsigned, "a"));
  const auto cond = mkBinary(BinaryOp::Ne, mkBinary(BinaryOp::And, a, mkConst(32, 1)), mkConst(32, 0));
  const std::string text = "(set-logic QF_BV)\n(declare-fun $0 () (_ BitVec 32))\n(assert (distinct " +
                           encodeBool(*cond) + " (= ((_ extract 0 0) $0) #b1)))\n(check-sat)\n";
  const std::string path = testing::TempDir() + "/extract.smt2";
  std::ofstream(path) << text;
  const auto r = testutil::shell("z3 -smt2 " + path + " 2>&1");
  EXPECT_EQ(r.out, "unsat\n");
}

TEST(External, ClosedExpressionsMatchEvaluationWidth8) {
  REQUIRE_EXTERNAL();
  if (solver != "z3 -in") GTEST_SKIP() << "needs z3";
  const BinaryOp ops[] = {BinaryOp::Add,  BinaryOp::Sub, BinaryOp::Mul, BinaryOp::UDiv, BinaryOp::SDiv,
                          BinaryOp::URem, BinaryOp::SRem, BinaryOp::And, BinaryOp::Or,   BinaryOp::Xor,
                          BinaryOp::Shl,  BinaryOp::LShr, BinaryOp::AShr, BinaryOp::Ult, BinaryOp::Sle,
                          BinaryOp::Eq};
  const std::string path = testing::TempDir() + "/closed.smt2";
  for (BinaryOp op : ops) {
    std::ofstream out(path);
    out << "(set-logic QF_BV)\n";
    for (uint64_t x = 0; x < 256; ++x) {
      for (uint64_t y = 0; y < 256; ++y) {
        const auto e = Expr::makeBinary(op, mkConst(8, x), mkConst(8, y));
        const uint64_t want = oracle::evalExpr(*e, {});
        ASSERT_EQ(applyBinary(op, 8, x, y), want) << opName(op) << " " << x << " " << y;
        if (isComparison(op)) {
          out << "(assert (= " << encodeBool(*e) << (want ? " true" : " false") << "))\n";
        } else {
          out << "(assert (= " << encodeExpr(*e) << " " << literal({8, want}) << "))\n";
        }
      }
    }
    out << "(check-sat)\n";
    out.close();
    const auto r = testutil::shell("z3 -smt2 " + path + " 2>&1");
    ASSERT_EQ(r.out, "sat\n") << opName(op);
  }
}
