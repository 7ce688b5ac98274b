#include "refutelint/symexec/engine.h"

#include <sstream>
#include <stdexcept>

#include "refutelint/frontend/parser.h"
#include "refutelint/intervals/solver.h"

namespace refutelint::symexec {

using frontend::BasicBlock;
using frontend::CfgStmt;
using frontend::FunctionCfg;
using frontend::Terminator;
using frontend::Type;
using ir::BinaryOp;
using ir::ExprRef;
using ir::ProgramState;
namespace ast = frontend::ast;

namespace {
constexpr uint64_t kStackBase = 0x10000;
constexpr uint64_t kFrameSize = 0x1000;
constexpr uint64_t kSlotSize = 8;
}  // namespace

uint64_t localAddress(uint32_t serial, std::size_t slot) {
  return kStackBase + serial * kFrameSize + slot * kSlotSize;
}

const char* opKindName(OpKind kind) {
  switch (kind) {
    case OpKind::Entry: return "entry";
    case OpKind::Bind: return "bind";
    case OpKind::Assign: return "assign";
    case OpKind::Assume: return "assume";
    case OpKind::Call: return "call";
    case OpKind::Return: return "return";
    case OpKind::Deref: return "deref";
    case OpKind::Epsilon: return "epsilon";
  }
  return "?";
}

void ExplorationBudget::validate() const {
  if (max_loop_unrollings == 0 || max_call_depth == 0 || max_nodes == 0)
    throw std::invalid_argument("exploration budget bounds must be positive");
}

ExprRef toCondition(const ExprRef& v) {
  if (v->width() == 1) {
    if (v->isComparison() || v->isConst()) return v;
    return ir::mkBinary(BinaryOp::Ne, v, ir::mkConst(1, 0));
  }
  if (v->kind() == ir::ExprKind::Cast && v->cast().operand->width() == 1)
    return toCondition(v->cast().operand);
  return ir::mkBinary(BinaryOp::Ne, v, ir::mkConst(v->width(), 0));
}

std::vector<NodeRef> extractPath(const NodeRef& eps) {
  if (!eps || !eps->isEpsilon()) throw std::invalid_argument("extractPath: not an epsilon node");
  std::vector<NodeRef> path;
  for (NodeRef n = eps; n; n = n->parent) path.push_back(n);
  return {path.rbegin(), path.rend()};
}

std::string ExplodedGraph::dump() const {
  std::ostringstream os;
  for (const auto& n : nodes) {
    os << "#" << n->id << " <- ";
    if (n->parent) os << "#" << n->parent->id;
    else os << "-";
    os << " " << opKindName(n->op.kind) << " \"" << n->op.label << "\"";
    os << " C=" << n->state.constraints.str();
    if (!n->state.opaque.empty()) {
      os << " O=[";
      for (std::size_t i = 0; i < n->state.opaque.size(); ++i) {
        const auto& oc = n->state.opaque[i];
        os << (i ? "; " : "") << ir::toString(oc.cond) << (oc.truth ? "=true" : "=false");
      }
      os << "]";
    }
    if (n->event) os << " !" << checkers::checkerName(n->event->checker) << " " << n->event->loc.str();
    os << "\n";
  }
  for (const auto& a : annotations) os << "@ " << a << "\n";
  return os.str();
}

struct SymbolicExecutor::Impl {
  const frontend::Program& program;
  ExplorationBudget budget;
  ExplodedGraph graph;
  ir::SymbolFactory symbols;
  bool stopped = false;

  struct Path {
    NodeRef tip;
    ProgramState state;
    bool dead = false;
  };
  std::vector<Path> stack;

  void annotate(const std::string& note) {
    graph.budget_exhausted = true;
    for (const auto& a : graph.annotations)
      if (a == note) return;
    graph.annotations.push_back(note);
  }

  NodeRef addNode(ProgramState state, EdgeOp op, NodeRef parent,
                  std::optional<checkers::BugEvent> event = std::nullopt) {
    if (graph.nodes.size() >= budget.max_nodes) {
      annotate("BudgetExhausted: node limit " + std::to_string(budget.max_nodes) + " reached");
      stopped = true;
      return nullptr;
    }
    auto n = std::make_shared<ExplodedNode>();
    n->id = static_cast<uint32_t>(graph.nodes.size());
    n->state = std::move(state);
    n->op = std::move(op);
    n->parent = std::move(parent);
    n->event = std::move(event);
    graph.nodes.push_back(n);
    if (n->event) graph.epsilons.push_back(n);
    return n;
  }

  // Appends a node for the path's current state.
  void step(Path& p, OpKind kind, std::string label, SourceLoc loc) {
    EdgeOp op;
    op.kind = kind;
    op.label = std::move(label);
    op.loc = loc;
    NodeRef n = addNode(p.state, std::move(op), p.tip);
    if (!n) {
      p.dead = true;
      return;
    }
    p.tip = std::move(n);
  }

  const FunctionCfg& cfgOf(const std::string& name) const {
    const FunctionCfg* f = program.find(name);
    if (!f) throw std::logic_error("no CFG for function '" + name + "'");
    return *f;
  }

  ExprRef fresh(const Type& type, const std::string& origin, SourceLoc loc) {
    const unsigned w = type.isPointer() ? 64 : type.width;
    return ir::mkSym(symbols.make(w, type.is_signed ? ir::Signedness::Signed : ir::Signedness::Unsigned,
                                  origin, loc));
  }

  // Splits off an epsilon node for the event and keeps going on the
  // complementary assumption.
  void check(Path& p, const std::optional<checkers::BugEvent>& ev) {
    if (!ev) return;
    if (auto bad = intervals::assume(p.state, ev->condition, true)) {
      EdgeOp op;
      op.kind = OpKind::Epsilon;
      op.label = ev->message;
      op.loc = ev->loc;
      op.cond = ev->condition;
      if (!addNode(std::move(*bad), std::move(op), p.tip, ev)) {
        p.dead = true;
        return;
      }
    }
    auto ok = intervals::assume(std::move(p.state), ev->condition, false);
    if (!ok) {
      p.dead = true;
      return;
    }
    p.state = std::move(*ok);
  }

  // Frame index and local slot addressed by a constant pointer, if any.
  std::optional<std::pair<std::size_t, int>> resolveLocal(const ProgramState& s, const ExprRef& ptr) const {
    if (!ptr->isConst()) return std::nullopt;
    const uint64_t addr = ptr->constant().bits();
    for (std::size_t i = 0; i < s.frames.size(); ++i) {
      const uint64_t base = localAddress(s.frames[i].serial, 0);
      if (addr < base || addr >= base + kFrameSize || (addr - base) % kSlotSize) continue;
      const std::size_t slot = (addr - base) / kSlotSize;
      if (slot < cfgOf(s.frames[i].function).locals.size()) return std::pair{i, static_cast<int>(slot)};
    }
    return std::nullopt;
  }

  ExprRef load(Path& p, const ExprRef& ptr, const Type& type, const ast::Expr& site) {
    if (auto loc = resolveLocal(p.state, ptr)) {
      ir::Frame& f = p.state.frames[loc->first];
      const auto& var = cfgOf(f.function).locals[loc->second];
      auto it = f.env.find(var.unique_name);
      if (it != f.env.end()) return it->second;
      ExprRef v = fresh(var.type, var.name, var.loc);
      f.env.emplace(var.unique_name, v);
      return v;
    }
    auto it = p.state.heap.find(ptr);
    const unsigned w = type.isPointer() ? 64 : type.width;
    if (it != p.state.heap.end() && it->second->width() == w) return it->second;
    ExprRef v = fresh(type, "*" + frontend::print(site.operand()), site.loc);
    p.state.heap.insert_or_assign(ptr, v);
    return v;
  }

  void store(Path& p, const ExprRef& ptr, const ExprRef& value) {
    if (auto loc = resolveLocal(p.state, ptr)) {
      ir::Frame& f = p.state.frames[loc->first];
      f.env.insert_or_assign(cfgOf(f.function).locals[loc->second].unique_name, value);
      return;
    }
    p.state.heap.insert_or_assign(ptr, value);
  }

  // Null check for `*operand`; returns the pointer value.
  ExprRef derefPointer(Path& p, const FunctionCfg& fn, const ast::Expr& deref) {
    const ast::Expr& operand = deref.operand();
    ExprRef ptr = eval(p, fn, operand);
    if (p.dead) return ptr;
    std::optional<std::string> var;
    if (operand.kind == ast::Expr::Kind::VarRef && !fn.locals[operand.var].is_temp)
      var = fn.locals[operand.var].name;
    check(p, checkers::checkNullDeref(p.state, ptr, deref.loc, deref.length, var));
    return ptr;
  }

  static ExprRef castTo(const ExprRef& v, const Type& from, const Type& to) {
    if (to.isBool()) return v->width() == 1 ? v : ir::mkBinary(BinaryOp::Ne, v, ir::mkConst(v->width(), 0));
    const unsigned w = to.isPointer() ? 64 : to.width;
    if (w == v->width()) return v;
    return ir::mkCast(v, w, from.isInteger() && from.is_signed);
  }

  static BinaryOp binaryOp(ast::BinaryOperator op, bool is_signed) {
    using B = ast::BinaryOperator;
    switch (op) {
      case B::Add: return BinaryOp::Add;
      case B::Sub: return BinaryOp::Sub;
      case B::Mul: return BinaryOp::Mul;
      case B::Div: return is_signed ? BinaryOp::SDiv : BinaryOp::UDiv;
      case B::Rem: return is_signed ? BinaryOp::SRem : BinaryOp::URem;
      case B::BitAnd: return BinaryOp::And;
      case B::BitOr: return BinaryOp::Or;
      case B::BitXor: return BinaryOp::Xor;
      case B::Shl: return BinaryOp::Shl;
      case B::Shr: return is_signed ? BinaryOp::AShr : BinaryOp::LShr;
      case B::Lt: return is_signed ? BinaryOp::Slt : BinaryOp::Ult;
      case B::Le: return is_signed ? BinaryOp::Sle : BinaryOp::Ule;
      case B::Gt: return is_signed ? BinaryOp::Sgt : BinaryOp::Ugt;
      case B::Ge: return is_signed ? BinaryOp::Sge : BinaryOp::Uge;
      case B::Eq: return BinaryOp::Eq;
      case B::Ne: return BinaryOp::Ne;
      case B::LogAnd:
      case B::LogOr: break;
    }
    throw std::logic_error("short-circuit operator survived lowering");
  }

  ExprRef eval(Path& p, const FunctionCfg& fn, const ast::Expr& e) {
    using K = ast::Expr::Kind;
    switch (e.kind) {
      case K::IntLiteral:
        return ir::mkConst(e.type.isPointer() ? 64 : e.type.width, e.value & ir::widthMask(e.type.width));
      case K::VarRef: {
        const auto& var = fn.locals[e.var];
        if (auto v = p.state.lookup(var.unique_name)) return *v;
        ExprRef v = fresh(var.type, var.name, var.loc);
        p.state.bind(var.unique_name, v);
        return v;
      }
      case K::Cast: {
        ExprRef v = eval(p, fn, e.operand());
        return castTo(v, e.operand().type, e.type);
      }
      case K::Unary: {
        switch (e.unary_op) {
          case ast::UnaryOperator::Neg:
            return ir::mkUnary(ir::UnaryOp::Neg, eval(p, fn, e.operand()));
          case ast::UnaryOperator::BitNot:
            return ir::mkUnary(ir::UnaryOp::BitNot, eval(p, fn, e.operand()));
          case ast::UnaryOperator::LogNot: {
            ExprRef v = eval(p, fn, e.operand());
            return ir::mkCast(ir::mkNot(toCondition(v)), e.type.width, false);
          }
          case ast::UnaryOperator::AddrOf:
            return ir::mkConst(64, localAddress(p.state.top().serial, e.operand().var));
          case ast::UnaryOperator::Deref: {
            ExprRef ptr = derefPointer(p, fn, e);
            if (p.dead) return ptr;
            return load(p, ptr, e.type, e);
          }
        }
        break;
      }
      case K::Binary: {
        const ast::Expr& l = e.operand(0);
        const ast::Expr& r = e.operand(1);
        ExprRef lv = eval(p, fn, l);
        if (p.dead) return lv;
        ExprRef rv = eval(p, fn, r);
        if (p.dead) return rv;
        const bool is_signed = l.type.isInteger() && l.type.is_signed;
        const BinaryOp op = binaryOp(e.binary_op, is_signed);
        if (rv->width() != lv->width()) rv = ir::mkCast(rv, lv->width(), r.type.is_signed);
        if (ir::isDivision(op)) {
          check(p, checkers::checkDivZero(p.state, rv, e.op_loc, 1));
          if (p.dead) return rv;
        }
        ExprRef v = ir::mkBinary(op, lv, rv);
        if (ast::isComparison(e.binary_op)) v = ir::mkCast(v, e.type.width, false);
        return v;
      }
      case K::Call:
        break;
    }
    throw std::logic_error("unexpected expression after lowering");
  }

  std::string callLabel(const CfgStmt& s) const {
    std::string label = s.callee + "(";
    for (std::size_t i = 0; i < s.args.size(); ++i) label += (i ? ", " : "") + frontend::print(*s.args[i]);
    return label + ")";
  }

  void execCall(Path& p, const FunctionCfg& fn, const CfgStmt& s) {
    std::vector<ExprRef> args;
    for (const auto& a : s.args) {
      args.push_back(eval(p, fn, *a));
      if (p.dead) return;
    }
    ++p.state.top().index;
    const FunctionCfg* callee = program.find(s.callee);
    const bool inline_ok = callee && p.state.frames.size() - 1 < budget.max_call_depth;
    if (inline_ok) {
      ir::Frame f;
      f.function = callee->name;
      f.serial = p.state.next_frame_serial++;
      f.block = callee->entry;
      if (s.var >= 0) f.result_var = fn.locals[s.var].unique_name;
      for (std::size_t i = 0; i < callee->params.size() && i < args.size(); ++i)
        f.env[callee->locals[callee->params[i]].unique_name] = args[i];
      p.state.frames.push_back(std::move(f));
      step(p, OpKind::Call, "call " + callLabel(s), s.call_loc);
      return;
    }
    if (!callee && !program.signatures.count(s.callee))
      throw std::logic_error("call to undeclared function '" + s.callee + "'");
    // Unknown callee: whatever the pointer arguments reach may have changed.
    for (std::size_t i = 0; i < s.args.size(); ++i) {
      if (!s.args[i]->type.isPointer()) continue;
      if (auto loc = resolveLocal(p.state, args[i])) {
        ir::Frame& f = p.state.frames[loc->first];
        const auto& var = cfgOf(f.function).locals[loc->second];
        f.env.insert_or_assign(var.unique_name, fresh(var.type, var.name, s.call_loc));
      } else {
        p.state.heap.clear();
      }
    }
    if (s.var >= 0) {
      const auto& var = fn.locals[s.var];
      p.state.bind(var.unique_name, fresh(var.type, s.callee + "()", s.call_loc));
    }
    step(p, OpKind::Call, "call " + callLabel(s) + " [unknown]", s.call_loc);
  }

  void execStmt(Path& p, const FunctionCfg& fn, const CfgStmt& s) {
    auto name = [&](int var) { return fn.locals[var].unique_name; };
    switch (s.kind) {
      case CfgStmt::Kind::Declare: {
        const auto& var = fn.locals[s.var];
        p.state.bind(var.unique_name, fresh(var.type, var.name, s.loc));
        ++p.state.top().index;
        step(p, OpKind::Bind, var.unique_name + " = *", s.loc);
        return;
      }
      case CfgStmt::Kind::Assign: {
        ExprRef v = eval(p, fn, *s.value);
        if (p.dead) return;
        p.state.bind(name(s.var), v);
        ++p.state.top().index;
        step(p, OpKind::Assign, name(s.var) + " = " + frontend::print(*s.value), s.loc);
        return;
      }
      case CfgStmt::Kind::Store: {
        ExprRef ptr = derefPointer(p, fn, *s.deref);
        if (p.dead) return;
        ExprRef v = eval(p, fn, *s.value);
        if (p.dead) return;
        store(p, ptr, v);
        ++p.state.top().index;
        step(p, OpKind::Deref, frontend::print(*s.deref) + " = " + frontend::print(*s.value), s.loc);
        return;
      }
      case CfgStmt::Kind::Eval: {
        eval(p, fn, *s.value);
        if (p.dead) return;
        ++p.state.top().index;
        step(p, OpKind::Assign, frontend::print(*s.value), s.loc);
        return;
      }
      case CfgStmt::Kind::Call:
        execCall(p, fn, s);
        return;
    }
  }

  // Runs one path until it branches, ends, or is abandoned.
  void run(Path p) {
    while (!stopped && !p.dead) {
      ir::Frame& f = p.state.top();
      const FunctionCfg& fn = cfgOf(f.function);
      const BasicBlock& bb = fn.blocks.at(f.block);
      if (f.index < bb.stmts.size()) {
        execStmt(p, fn, bb.stmts[f.index]);
        continue;
      }
      const Terminator& t = bb.term;
      switch (t.kind) {
        case Terminator::Kind::Goto: {
          if (t.back_edge) {
            unsigned& taken = p.state.back_edges[{f.serial, t.target}];
            if (++taken > budget.max_loop_unrollings) {
              annotate("BudgetExhausted: loop at " + fn.name + ":" + t.loc.str() + " unrolled " +
                       std::to_string(budget.max_loop_unrollings) + " times");
              return;
            }
          }
          f.block = t.target;
          f.index = 0;
          continue;
        }
        case Terminator::Kind::Branch: {
          ExprRef v = eval(p, fn, *t.cond);
          if (p.dead) return;
          const ExprRef c = toCondition(v);
          std::vector<Path> next;
          for (bool truth : {true, false}) {
            auto s = intervals::assume(p.state, c, truth);
            if (!s) continue;
            s->top().block = truth ? t.target : t.false_target;
            s->top().index = 0;
            EdgeOp op;
            op.kind = OpKind::Assume;
            op.label = "[" + frontend::print(*t.cond) + "] " + (truth ? "true" : "false");
            op.loc = t.loc;
            op.cond = c;
            op.truth = truth;
            NodeRef n = addNode(*s, std::move(op), p.tip);
            if (!n) return;
            next.push_back(Path{n, std::move(*s)});
          }
          for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(std::move(*it));
          return;
        }
        case Terminator::Kind::Return: {
          std::optional<ExprRef> v;
          if (t.value) {
            v = eval(p, fn, *t.value);
            if (p.dead) return;
          }
          const std::optional<std::string> result_var = f.result_var;
          const std::string label = "return" + (t.value ? " " + frontend::print(*t.value) : std::string());
          p.state.frames.pop_back();
          if (p.state.frames.empty()) {
            step(p, OpKind::Return, label, t.loc);
            return;
          }
          if (result_var) {
            if (!v) {
              const FunctionCfg& caller = cfgOf(p.state.top().function);
              const ast::LocalVar* var = nullptr;
              for (const auto& l : caller.locals)
                if (l.unique_name == *result_var) var = &l;
              v = fresh(var ? var->type : fn.return_type, fn.name + "()", t.loc);
            }
            p.state.bind(*result_var, *v);
          }
          step(p, OpKind::Return, label, t.loc);
          continue;
        }
      }
    }
  }

  ExplodedGraph execute(const std::string& entry) {
    const FunctionCfg* fn = program.find(entry);
    if (!fn) throw std::invalid_argument("entry function '" + entry + "' is not defined");
    ProgramState s;
    ir::Frame f;
    f.function = fn->name;
    f.serial = 0;
    f.block = fn->entry;
    std::string label = fn->name + "(";
    for (std::size_t i = 0; i < fn->params.size(); ++i) {
      const auto& var = fn->locals[fn->params[i]];
      f.env[var.unique_name] = fresh(var.type, var.name, var.loc);
      label += (i ? ", " : "") + var.name + " = *";
    }
    s.frames.push_back(std::move(f));
    s.next_frame_serial = 1;
    EdgeOp op;
    op.kind = OpKind::Entry;
    op.label = label + ")";
    graph.root = addNode(s, std::move(op), nullptr);
    stack.push_back(Path{graph.root, std::move(s)});
    while (!stack.empty() && !stopped) {
      Path p = std::move(stack.back());
      stack.pop_back();
      run(std::move(p));
    }
    graph.symbol_count = symbols.count();
    return std::move(graph);
  }
};

SymbolicExecutor::SymbolicExecutor(const frontend::Program& program, ExplorationBudget budget)
    : program_(program), budget_(budget) {
  budget_.validate();
}

ExplodedGraph SymbolicExecutor::execute(const std::string& entry) {
  Impl impl{program_, budget_, {}, {}, false, {}};
  return impl.execute(entry);
}

}  // namespace refutelint::symexec
