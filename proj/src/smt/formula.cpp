#include "refutelint/smt/formula.h"

#include <algorithm>

namespace refutelint::smt {

using ir::BinaryOp;
using ir::Expr;
using ir::ExprKind;
using ir::UnaryOp;

Assertion Assertion::equal(ExprRef var, ir::BitVecValue value) {
  Assertion a;
  a.kind = Kind::Equal;
  a.var = std::move(var);
  a.lower = a.upper = value;
  return a;
}

Assertion Assertion::range(ExprRef var, ir::BitVecValue lower, ir::BitVecValue upper) {
  Assertion a;
  a.kind = Kind::Range;
  a.var = std::move(var);
  a.lower = lower;
  a.upper = upper;
  return a;
}

Assertion Assertion::condition(ExprRef cond, bool truth) {
  if (cond->width() != 1) throw std::invalid_argument("condition must have width 1");
  Assertion a;
  a.kind = Kind::Condition;
  a.cond = std::move(cond);
  a.truth = truth;
  return a;
}

bool operator==(const Assertion& a, const Assertion& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Assertion::Kind::Condition) return a.truth == b.truth && *a.cond == *b.cond;
  return a.lower == b.lower && a.upper == b.upper && *a.var == *b.var;
}

void SmtFormula::declare(const Expr& e) {
  for (const auto& s : ir::collectSymbols(e)) {
    auto it = std::lower_bound(declarations_.begin(), declarations_.end(), s.id,
                               [](const ir::Symbol& d, uint32_t id) { return d.id < id; });
    if (it != declarations_.end() && it->id == s.id) continue;
    declarations_.insert(it, s);
  }
}

bool SmtFormula::add(Assertion a) {
  if (std::find(assertions_.begin(), assertions_.end(), a) != assertions_.end()) return false;
  if (a.kind == Assertion::Kind::Condition) {
    declare(*a.cond);
  } else {
    if (a.lower.width() != a.var->width()) throw std::invalid_argument("bound width mismatch");
    declare(*a.var);
    constrained_.insert(a.var);
  }
  assertions_.push_back(std::move(a));
  return true;
}

std::string literal(const ir::BitVecValue& v) {
  return "(_ bv" + std::to_string(v.bits()) + " " + std::to_string(v.width()) + ")";
}

namespace {

const char* bvOp(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "bvadd";
    case BinaryOp::Sub: return "bvsub";
    case BinaryOp::Mul: return "bvmul";
    case BinaryOp::UDiv: return "bvudiv";
    case BinaryOp::SDiv: return "bvsdiv";
    case BinaryOp::URem: return "bvurem";
    case BinaryOp::SRem: return "bvsrem";
    case BinaryOp::And: return "bvand";
    case BinaryOp::Or: return "bvor";
    case BinaryOp::Xor: return "bvxor";
    case BinaryOp::Shl: return "bvshl";
    case BinaryOp::LShr: return "bvlshr";
    case BinaryOp::AShr: return "bvashr";
    case BinaryOp::Ult: return "bvult";
    case BinaryOp::Ule: return "bvule";
    case BinaryOp::Ugt: return "bvugt";
    case BinaryOp::Uge: return "bvuge";
    case BinaryOp::Slt: return "bvslt";
    case BinaryOp::Sle: return "bvsle";
    case BinaryOp::Sgt: return "bvsgt";
    case BinaryOp::Sge: return "bvsge";
    case BinaryOp::Eq:
    case BinaryOp::Ne: return "=";
  }
  throw UnsupportedExpression("unknown binary operator");
}

std::string zero(unsigned width) { return literal(ir::BitVecValue::zero(width)); }

}  // namespace

std::string encodeBool(const Expr& e) {
  if (e.isComparison()) {
    const auto& b = e.binary();
    std::string t = std::string("(") + bvOp(b.op) + " " + encodeExpr(*b.lhs) + " " + encodeExpr(*b.rhs) + ")";
    return b.op == BinaryOp::Ne ? "(not " + t + ")" : t;
  }
  if (e.kind() == ExprKind::Unary && e.unary().op == UnaryOp::LogNot) {
    const Expr& x = *e.unary().operand;
    return "(= " + encodeExpr(x) + " " + zero(x.width()) + ")";
  }
  if (e.isConst()) return e.constant().isZero() ? "false" : "true";
  return "(not (= " + encodeExpr(e) + " " + zero(e.width()) + "))";
}

std::string encodeExpr(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Const: return literal(e.constant());
    case ExprKind::Sym: return e.symbol().name();
    case ExprKind::Cast: {
      const auto& c = e.cast();
      const unsigned from = c.operand->width();
      const std::string x = encodeExpr(*c.operand);
      if (e.width() == from) return x;
      if (e.width() < from) return "((_ extract " + std::to_string(e.width() - 1) + " 0) " + x + ")";
      return std::string("((_ ") + (c.sign_extend ? "sign_extend " : "zero_extend ") +
             std::to_string(e.width() - from) + ") " + x + ")";
    }
    case ExprKind::Unary: {
      const auto& u = e.unary();
      switch (u.op) {
        case UnaryOp::Neg: return "(bvneg " + encodeExpr(*u.operand) + ")";
        case UnaryOp::BitNot: return "(bvnot " + encodeExpr(*u.operand) + ")";
        case UnaryOp::LogNot: return "(ite " + encodeBool(e) + " #b1 #b0)";
      }
      break;
    }
    case ExprKind::Binary: {
      if (e.isComparison()) return "(ite " + encodeBool(e) + " #b1 #b0)";
      const auto& b = e.binary();
      return std::string("(") + bvOp(b.op) + " " + encodeExpr(*b.lhs) + " " + encodeExpr(*b.rhs) + ")";
    }
  }
  throw UnsupportedExpression("cannot encode " + ir::toString(e));
}

std::string encodeAssertion(const Assertion& a) {
  switch (a.kind) {
    case Assertion::Kind::Equal:
      return "(= " + encodeExpr(*a.var) + " " + literal(a.lower) + ")";
    case Assertion::Kind::Range: {
      const std::string v = encodeExpr(*a.var);
      return "(and (bvuge " + v + " " + literal(a.lower) + ") (bvule " + v + " " + literal(a.upper) + "))";
    }
    case Assertion::Kind::Condition: {
      const std::string b = encodeBool(*a.cond);
      return a.truth ? b : "(not " + b + ")";
    }
  }
  return "true";
}

std::string emitSmtLib(const SmtFormula& f) {
  std::string out = "(set-logic QF_BV)\n";
  for (const auto& s : f.declarations())
    out += "(declare-fun " + s.name() + " () (_ BitVec " + std::to_string(s.width) + "))\n";
  for (const auto& a : f.assertions()) out += "(assert " + encodeAssertion(a) + ")\n";
  out += "(check-sat)\n";
  return out;
}

}  // namespace refutelint::smt
