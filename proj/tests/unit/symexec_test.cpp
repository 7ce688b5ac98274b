#include <gtest/gtest.h>

#include <random>

#include "generator.h"
#include "helpers.h"
#include "refutelint/checkers/checkers.h"
#include "refutelint/symexec/engine.h"

using namespace refutelint;
using namespace refutelint::symexec;
using checkers::CheckerId;
using testutil::explore;

TEST(Executor, ParityPathShape) {
  const auto e = explore(testutil::paritySource(), "func");
  ASSERT_EQ(e.graph.epsilons.size(), 1u);
  const auto path = extractPath(e.graph.epsilons[0]);
  std::vector<OpKind> kinds;
  for (const auto& n : path) kinds.push_back(n->op.kind);
  EXPECT_EQ(kinds, (std::vector<OpKind>{OpKind::Entry, OpKind::Assign, OpKind::Assume, OpKind::Assume,
                                        OpKind::Epsilon}));
  EXPECT_EQ(path[0]->op.label, "func(a = *)");
  EXPECT_EQ(path[1]->op.label, "z = 0");
  EXPECT_EQ(path[2]->op.label, "[(a & 1)] true");
  EXPECT_TRUE(path[2]->op.truth);
  EXPECT_EQ(path[3]->op.label, "[((a & 1) ^ 1)] true");
  const auto& ev = *path[4]->event;
  EXPECT_EQ(ev.checker, CheckerId::NullDereference);
  EXPECT_EQ(ev.message, "Dereference of null pointer (loaded from variable 'z')");
  EXPECT_EQ(ev.loc, (SourceLoc{4, 12}));
  // Root, both guard outcomes, both returns.
  EXPECT_EQ(e.graph.nodes.size(), 9u);
  for (std::size_t i = 0; i < e.graph.nodes.size(); ++i) EXPECT_EQ(e.graph.nodes[i]->id, i);
  EXPECT_FALSE(e.graph.budget_exhausted);
}

TEST(Executor, StraightLineFunction) {
  const auto e = explore("int f(void) { return 0; }", "f");
  EXPECT_TRUE(e.graph.epsilons.empty());
  for (const auto& n : e.graph.nodes) {
    int children = 0;
    for (const auto& m : e.graph.nodes) children += m->parent == n;
    EXPECT_LE(children, 1);
  }
  EXPECT_EQ(e.graph.nodes.back()->op.kind, OpKind::Return);
}

TEST(Executor, InfiniteLoopHitsBudget) {
  ExplorationBudget b;
  b.max_loop_unrollings = 4;
  const auto e = explore("int f(void) { while (1) { } return 0; }", "f", b);
  EXPECT_TRUE(e.graph.budget_exhausted);
  ASSERT_FALSE(e.graph.annotations.empty());
  EXPECT_EQ(e.graph.annotations[0].rfind("BudgetExhausted", 0), 0u);
  int header_visits = 0;
  for (const auto& n : e.graph.nodes) header_visits += n->op.kind == OpKind::Assume;
  EXPECT_EQ(header_visits, 5);  // initial test plus four unrollings
}

TEST(Executor, LoopWithinBudgetFindsBugAfterIterations) {
  const auto e = explore("int f(void) { int i = 0; int *p = 0; while (i < 3) i = i + 1; return *p; }", "f");
  EXPECT_FALSE(e.graph.budget_exhausted);
  EXPECT_EQ(e.graph.epsilons.size(), 1u);
}

TEST(Executor, BudgetValidation) {
  ExplorationBudget b;
  b.max_nodes = 0;
  EXPECT_THROW(b.validate(), std::invalid_argument);
  const auto tu = frontend::parse("int f(void) { return 0; }");
  const auto program = frontend::lower(tu);
  SymbolicExecutor ex(program);
  EXPECT_THROW(ex.execute("missing"), std::invalid_argument);
}

TEST(Executor, InlinedCallIsIdentity) {
  const std::string id = "int id(int x) { return x; }\n";
  const std::string inc = "int id(int x) { return x + 1; }\n";
  const std::string body = "int f(int a) { int r = id(a); return 10 / (r - a); }\n";
  const auto e = explore(id + body, "f");
  ASSERT_EQ(e.graph.epsilons.size(), 1u);
  const auto& st = e.graph.epsilons[0]->state;
  EXPECT_EQ(st.frames.size(), 1u);
  EXPECT_EQ(**st.lookup("r"), **st.lookup("a"));
  EXPECT_EQ(e.graph.epsilons[0]->event->checker, CheckerId::DivideZero);
  const auto g = explore(inc + body, "f");
  ASSERT_EQ(g.graph.epsilons.size(), 1u);
  EXPECT_EQ(ir::toString(*g.graph.epsilons[0]->state.lookup("r")), "(add $0 1:32)");
}

TEST(Executor, ExternalResultIsFresh) {
  const auto e = explore("int g(int v);\nint f(int a) { int r = g(a); return 10 / (r - a); }", "f");
  // r is unrelated to a, so the divisor may be zero.
  ASSERT_EQ(e.graph.epsilons.size(), 1u);
  const auto& st = e.graph.epsilons[0]->state;
  const auto r = st.lookup("r");
  const auto a = st.lookup("a");
  ASSERT_TRUE(r && a);
  EXPECT_EQ((*r)->kind(), ir::ExprKind::Sym);
  EXPECT_NE((*r)->symbol().id, (*a)->symbol().id);
  EXPECT_EQ(e.graph.symbol_count, 2u);
}

TEST(Executor, ExternalCallHavocsPointee) {
  const std::string decl = "void h(int *p);\n";
  EXPECT_TRUE(explore("int f(void) { int v = 3; return 10 / v; }", "f").graph.epsilons.empty());
  const auto e = explore(decl + "int f(void) { int v = 3; h(&v); return 10 / v; }", "f");
  ASSERT_EQ(e.graph.epsilons.size(), 1u);
  const auto v = e.graph.epsilons[0]->state.lookup("v");
  ASSERT_TRUE(v);
  EXPECT_EQ((*v)->kind(), ir::ExprKind::Sym);
}

TEST(Executor, PointerStoresAndLoads) {
  const auto e = explore("int f(int a) { int x = 0; int *p = &x; *p = 5; return 10 / (x - 5); }", "f");
  ASSERT_EQ(e.graph.epsilons.size(), 1u);
  const auto ok = explore("int f(int a) { int x = 0; int *p = &x; *p = 5; return 10 / x; }", "f");
  EXPECT_TRUE(ok.graph.epsilons.empty());
}

TEST(ExtractPath, RootIsNotAnEpsilonNode) {
  const auto e = explore(testutil::paritySource(), "func");
  EXPECT_THROW(extractPath(e.graph.root), std::invalid_argument);
}

TEST(ExtractPath, TwoEpsilonNodesGiveTwoPaths) {
  const auto e = explore("int f(int a) { int *p = 0; if (a > 3) return *p; return 1 / a; }", "f");
  ASSERT_EQ(e.graph.epsilons.size(), 2u);
  const auto p1 = extractPath(e.graph.epsilons[0]);
  const auto p2 = extractPath(e.graph.epsilons[1]);
  EXPECT_NE(p1.back(), p2.back());
  EXPECT_EQ(p1.front(), p2.front());
  for (const auto& p : {p1, p2})
    for (std::size_t i = 1; i < p.size(); ++i) EXPECT_EQ(p[i]->parent, p[i - 1]);
}

TEST(Executor, DeterministicGraphs) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const auto prog = oracle::generateProgram(rng);
    const auto a = explore(prog.source, "f");
    const auto b = explore(prog.source, "f");
    ASSERT_EQ(a.graph.dump(), b.graph.dump());
  }
}

TEST(Executor, NoEmptyIntervalsOnExpandedNodes) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const auto prog = oracle::generateProgram(rng);
    const auto e = explore(prog.source, "f");
    for (const auto& n : e.graph.nodes)
      for (const auto& [k, iv] : n->state.constraints) ASSERT_LE(iv.lower().bits(), iv.upper().bits());
  }
}

TEST(Executor, LocalAddressesAreDistinct) {
  EXPECT_NE(localAddress(0, 0), localAddress(0, 1));
  EXPECT_NE(localAddress(0, 0), localAddress(1, 0));
  EXPECT_NE(localAddress(0, 0), 0u);
}

TEST(Executor, ToConditionBridgesScalars) {
  ir::SymbolFactory f;
  const auto a = ir::mkSym(f.make(32, ir::Signedness::Signed, "a"));
  EXPECT_EQ(ir::toString(toCondition(a)), "(ne $0 0:32)");
  const auto cmp = ir::mkBinary(ir::BinaryOp::Slt, a, ir::mkConst(32, 3));
  EXPECT_EQ(*toCondition(cmp), *cmp);
}
