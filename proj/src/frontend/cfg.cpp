#include "refutelint/frontend/cfg.h"

#include <deque>
#include <sstream>

#include "refutelint/frontend/parser.h"

namespace refutelint::frontend {

using namespace ast;

namespace {

class Lowerer {
 public:
  explicit Lowerer(const Function& fn) : fn_(fn) {
    cfg_.name = fn.name;
    cfg_.return_type = fn.return_type;
    cfg_.params = fn.params;
    cfg_.locals = fn.locals;
  }

  FunctionCfg run() {
    cur_ = newBlock();
    lowerStmt(*fn_.body);
    Terminator ret;
    ret.kind = Terminator::Kind::Return;
    terminate(ret);
    prune();
    return std::move(cfg_);
  }

 private:
  std::size_t newBlock() {
    BasicBlock b;
    b.id = blocks_.size();
    blocks_.push_back(std::move(b));
    terminated_.push_back(false);
    return blocks_.size() - 1;
  }

  void emit(CfgStmt s) {
    if (!terminated_[cur_]) blocks_[cur_].stmts.push_back(std::move(s));
  }

  void terminate(Terminator t) {
    if (terminated_[cur_]) return;
    blocks_[cur_].term = std::move(t);
    terminated_[cur_] = true;
  }

  void jump(std::size_t target, bool back_edge = false, SourceLoc loc = {}) {
    Terminator t;
    t.kind = Terminator::Kind::Goto;
    t.target = target;
    t.back_edge = back_edge;
    t.loc = loc;
    terminate(t);
  }

  int newTemp(const Type& type, SourceLoc loc) {
    LocalVar v;
    v.name = "__t" + std::to_string(temps_++);
    v.unique_name = v.name;
    v.type = type;
    v.loc = loc;
    v.is_temp = true;
    cfg_.locals.push_back(std::move(v));
    return static_cast<int>(cfg_.locals.size() - 1);
  }

  ExprPtr varRef(int var, const Expr& like) const {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::VarRef;
    e->var = var;
    e->text = cfg_.locals[var].name;
    e->type = cfg_.locals[var].type;
    e->loc = like.loc;
    e->length = like.length;
    return e;
  }

  static ExprPtr intLiteral(uint64_t value, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::IntLiteral;
    e->value = value;
    e->text = std::to_string(value);
    e->type = Type::intType();
    e->loc = loc;
    return e;
  }

  void emitCall(const Expr& call, int dest, SourceLoc stmt_loc) {
    CfgStmt s;
    s.kind = CfgStmt::Kind::Call;
    s.loc = stmt_loc;
    s.call_loc = call.loc;
    s.callee = call.text;
    s.var = dest;
    for (const auto& a : call.operands) s.args.push_back(lowerExpr(a, stmt_loc));
    emit(std::move(s));
  }

  ExprPtr lowerExpr(const ExprPtr& e, SourceLoc stmt_loc) {
    if (e->kind == Expr::Kind::Call) {
      const int tmp = newTemp(e->type, e->loc);
      emitCall(*e, tmp, stmt_loc);
      return varRef(tmp, *e);
    }
    if (e->kind == Expr::Kind::Binary && isLogical(e->binary_op)) {
      const int tmp = newTemp(Type::intType(), e->loc);
      const std::size_t t = newBlock(), f = newBlock(), join = newBlock();
      lowerCond(e, t, f, stmt_loc);
      for (auto [block, value] : {std::pair{t, 1}, std::pair{f, 0}}) {
        cur_ = block;
        CfgStmt s;
        s.kind = CfgStmt::Kind::Assign;
        s.loc = stmt_loc;
        s.var = tmp;
        s.value = intLiteral(value, e->loc);
        emit(std::move(s));
        jump(join);
      }
      cur_ = join;
      return varRef(tmp, *e);
    }
    bool changed = false;
    std::vector<ExprPtr> ops;
    ops.reserve(e->operands.size());
    for (const auto& o : e->operands) {
      ops.push_back(lowerExpr(o, stmt_loc));
      changed |= ops.back() != o;
    }
    if (!changed) return e;
    auto copy = std::make_shared<Expr>(*e);
    copy->operands = std::move(ops);
    return copy;
  }

  static bool isShortCircuit(const Expr& e) {
    return (e.kind == Expr::Kind::Binary && isLogical(e.binary_op)) ||
           (e.kind == Expr::Kind::Unary && e.unary_op == UnaryOperator::LogNot &&
            isShortCircuit(e.operand()));
  }

  void lowerCond(const ExprPtr& e, std::size_t on_true, std::size_t on_false, SourceLoc stmt_loc) {
    if (e->kind == Expr::Kind::Binary && e->binary_op == BinaryOperator::LogAnd) {
      const std::size_t mid = newBlock();
      lowerCond(e->operands[0], mid, on_false, stmt_loc);
      cur_ = mid;
      lowerCond(e->operands[1], on_true, on_false, stmt_loc);
      return;
    }
    if (e->kind == Expr::Kind::Binary && e->binary_op == BinaryOperator::LogOr) {
      const std::size_t mid = newBlock();
      lowerCond(e->operands[0], on_true, mid, stmt_loc);
      cur_ = mid;
      lowerCond(e->operands[1], on_true, on_false, stmt_loc);
      return;
    }
    if (e->kind == Expr::Kind::Unary && e->unary_op == UnaryOperator::LogNot &&
        isShortCircuit(e->operand())) {
      lowerCond(e->operands[0], on_false, on_true, stmt_loc);
      return;
    }
    Terminator t;
    t.kind = Terminator::Kind::Branch;
    t.loc = e->loc;
    t.cond = lowerExpr(e, stmt_loc);
    t.target = on_true;
    t.false_target = on_false;
    terminate(t);
  }

  void lowerStmt(const Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::Block:
        for (const auto& c : s.body) lowerStmt(*c);
        return;
      case Stmt::Kind::Decl: {
        CfgStmt out;
        out.loc = s.loc;
        out.var = s.var;
        if (s.value) {
          out.kind = CfgStmt::Kind::Assign;
          out.value = lowerExpr(s.value, s.loc);
        } else {
          out.kind = CfgStmt::Kind::Declare;
        }
        emit(std::move(out));
        return;
      }
      case Stmt::Kind::Assign: {
        CfgStmt out;
        out.loc = s.loc;
        if (s.target->kind == Expr::Kind::VarRef) {
          out.kind = CfgStmt::Kind::Assign;
          out.var = s.target->var;
          out.value = lowerExpr(s.value, s.loc);
        } else {
          out.kind = CfgStmt::Kind::Store;
          out.deref = s.target;
          out.target = lowerExpr(s.target->operands[0], s.loc);
          out.value = lowerExpr(s.value, s.loc);
        }
        emit(std::move(out));
        return;
      }
      case Stmt::Kind::ExprStmt: {
        if (s.value->kind == Expr::Kind::Call) {
          emitCall(*s.value, -1, s.loc);
          return;
        }
        CfgStmt out;
        out.kind = CfgStmt::Kind::Eval;
        out.loc = s.loc;
        out.value = lowerExpr(s.value, s.loc);
        emit(std::move(out));
        return;
      }
      case Stmt::Kind::Return: {
        Terminator t;
        t.kind = Terminator::Kind::Return;
        t.loc = s.loc;
        if (s.value) t.value = lowerExpr(s.value, s.loc);
        terminate(t);
        cur_ = newBlock();  // anything after is unreachable
        return;
      }
      case Stmt::Kind::If: {
        const std::size_t then_block = newBlock();
        const std::size_t join = newBlock();
        const std::size_t else_block = s.else_branch ? newBlock() : join;
        lowerCond(s.cond, then_block, else_block, s.loc);
        cur_ = then_block;
        lowerStmt(*s.then_branch);
        jump(join);
        if (s.else_branch) {
          cur_ = else_block;
          lowerStmt(*s.else_branch);
          jump(join);
        }
        cur_ = join;
        return;
      }
      case Stmt::Kind::While: {
        const std::size_t header = newBlock();
        jump(header);
        cur_ = header;
        const std::size_t body = newBlock();
        const std::size_t exit = newBlock();
        lowerCond(s.cond, body, exit, s.loc);
        cur_ = body;
        lowerStmt(*s.then_branch);
        jump(header, /*back_edge=*/true, s.loc);
        cur_ = exit;
        return;
      }
    }
  }

  // Drops unreachable blocks and renumbers the rest in discovery order.
  void prune() {
    std::vector<long> remap(blocks_.size(), -1);
    std::vector<std::size_t> order;
    std::deque<std::size_t> queue{0};
    remap[0] = 0;
    order.push_back(0);
    while (!queue.empty()) {
      const std::size_t b = queue.front();
      queue.pop_front();
      const Terminator& t = blocks_[b].term;
      std::vector<std::size_t> succ;
      if (t.kind == Terminator::Kind::Goto) succ = {t.target};
      if (t.kind == Terminator::Kind::Branch) succ = {t.target, t.false_target};
      for (std::size_t s : succ) {
        if (remap[s] >= 0) continue;
        remap[s] = static_cast<long>(order.size());
        order.push_back(s);
        queue.push_back(s);
      }
    }
    for (std::size_t old : order) {
      BasicBlock b = std::move(blocks_[old]);
      b.id = static_cast<std::size_t>(remap[old]);
      b.term.target = static_cast<std::size_t>(std::max(0L, remap[b.term.target]));
      b.term.false_target = static_cast<std::size_t>(std::max(0L, remap[b.term.false_target]));
      cfg_.blocks.push_back(std::move(b));
    }
    cfg_.entry = 0;
  }

  const Function& fn_;
  FunctionCfg cfg_;
  std::vector<BasicBlock> blocks_;
  std::vector<bool> terminated_;
  std::size_t cur_ = 0;
  int temps_ = 0;
};

}  // namespace

std::vector<std::size_t> FunctionCfg::exits() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks)
    if (b.term.kind == Terminator::Kind::Return) out.push_back(b.id);
  return out;
}

std::vector<std::size_t> FunctionCfg::successors(std::size_t block) const {
  const Terminator& t = blocks.at(block).term;
  switch (t.kind) {
    case Terminator::Kind::Goto: return {t.target};
    case Terminator::Kind::Branch: return {t.target, t.false_target};
    case Terminator::Kind::Return: return {};
  }
  return {};
}

const FunctionCfg* Program::find(const std::string& name) const {
  for (const auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

FunctionCfg lower(const Function& fn) {
  if (!fn.isDefined()) throw std::invalid_argument("cannot lower declaration '" + fn.name + "'");
  return Lowerer(fn).run();
}

Program lower(const TranslationUnit& tu) {
  Program p;
  for (const auto& fn : tu.functions) {
    Signature sig;
    sig.name = fn.name;
    sig.return_type = fn.return_type;
    for (std::size_t i = 0; i < fn.params.size(); ++i) sig.params.push_back(fn.param(i).type);
    sig.defined = fn.isDefined();
    p.signatures[fn.name] = std::move(sig);
    if (fn.isDefined()) p.functions.push_back(lower(fn));
  }
  return p;
}

std::string dump(const FunctionCfg& cfg) {
  std::ostringstream os;
  os << "function " << cfg.name << "\n";
  for (const auto& b : cfg.blocks) {
    os << "bb" << b.id << (b.id == cfg.entry ? " (entry)" : "") << ":\n";
    for (const auto& s : b.stmts) {
      os << "  ";
      const std::string var = s.var >= 0 ? cfg.locals[s.var].unique_name : "";
      switch (s.kind) {
        case CfgStmt::Kind::Declare: os << "declare " << var; break;
        case CfgStmt::Kind::Assign: os << var << " = " << print(*s.value); break;
        case CfgStmt::Kind::Store: os << "*" << print(*s.target) << " = " << print(*s.value); break;
        case CfgStmt::Kind::Eval: os << "eval " << print(*s.value); break;
        case CfgStmt::Kind::Call: {
          if (!var.empty()) os << var << " = ";
          os << "call " << s.callee << "(";
          for (std::size_t i = 0; i < s.args.size(); ++i) os << (i ? ", " : "") << print(*s.args[i]);
          os << ")";
          break;
        }
      }
      os << "\n";
    }
    const Terminator& t = b.term;
    switch (t.kind) {
      case Terminator::Kind::Goto:
        os << "  goto bb" << t.target << (t.back_edge ? " (back edge)" : "") << "\n";
        break;
      case Terminator::Kind::Branch:
        os << "  branch " << print(*t.cond) << " ? bb" << t.target << " : bb" << t.false_target << "\n";
        break;
      case Terminator::Kind::Return:
        os << "  return" << (t.value ? " " + print(*t.value) : "") << "\n";
        break;
    }
  }
  return os.str();
}

}  // namespace refutelint::frontend
