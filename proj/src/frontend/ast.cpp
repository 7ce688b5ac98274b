#include "refutelint/frontend/ast.h"

namespace refutelint::frontend::ast {

const char* spelling(UnaryOperator op) {
  switch (op) {
    case UnaryOperator::Neg: return "-";
    case UnaryOperator::LogNot: return "!";
    case UnaryOperator::BitNot: return "~";
    case UnaryOperator::Deref: return "*";
    case UnaryOperator::AddrOf: return "&";
  }
  return "?";
}

const char* spelling(BinaryOperator op) {
  switch (op) {
    case BinaryOperator::Add: return "+";
    case BinaryOperator::Sub: return "-";
    case BinaryOperator::Mul: return "*";
    case BinaryOperator::Div: return "/";
    case BinaryOperator::Rem: return "%";
    case BinaryOperator::BitAnd: return "&";
    case BinaryOperator::BitOr: return "|";
    case BinaryOperator::BitXor: return "^";
    case BinaryOperator::Shl: return "<<";
    case BinaryOperator::Shr: return ">>";
    case BinaryOperator::Lt: return "<";
    case BinaryOperator::Le: return "<=";
    case BinaryOperator::Gt: return ">";
    case BinaryOperator::Ge: return ">=";
    case BinaryOperator::Eq: return "==";
    case BinaryOperator::Ne: return "!=";
    case BinaryOperator::LogAnd: return "&&";
    case BinaryOperator::LogOr: return "||";
  }
  return "?";
}

const Function* TranslationUnit::find(const std::string& name) const {
  for (const auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

std::vector<const Function*> TranslationUnit::definitions() const {
  std::vector<const Function*> out;
  for (const auto& f : functions)
    if (f.isDefined()) out.push_back(&f);
  return out;
}

std::size_t countStatements(const Stmt& s) {
  switch (s.kind) {
    case Stmt::Kind::Block: {
      std::size_t n = 0;
      for (const auto& c : s.body) n += countStatements(*c);
      return n;
    }
    case Stmt::Kind::If:
      return 1 + countStatements(*s.then_branch) + (s.else_branch ? countStatements(*s.else_branch) : 0);
    case Stmt::Kind::While:
      return 1 + countStatements(*s.then_branch);
    default:
      return 1;
  }
}

namespace {

bool equalExpr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind || !(a->type == b->type) || a->operands.size() != b->operands.size())
    return false;
  switch (a->kind) {
    case Expr::Kind::IntLiteral:
      if (a->value != b->value || a->text != b->text) return false;
      break;
    case Expr::Kind::VarRef:
      if (a->var != b->var || a->text != b->text) return false;
      break;
    case Expr::Kind::Call:
      if (a->text != b->text) return false;
      break;
    case Expr::Kind::Unary:
      if (a->unary_op != b->unary_op) return false;
      break;
    case Expr::Kind::Binary:
      if (a->binary_op != b->binary_op) return false;
      break;
    case Expr::Kind::Cast:
      if (a->implicit != b->implicit) return false;
      break;
  }
  for (std::size_t i = 0; i < a->operands.size(); ++i)
    if (!equalExpr(a->operands[i], b->operands[i])) return false;
  return true;
}

bool equalStmt(const StmtPtr& a, const StmtPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind || a->var != b->var || a->body.size() != b->body.size()) return false;
  if (!equalExpr(a->target, b->target) || !equalExpr(a->value, b->value) ||
      !equalExpr(a->cond, b->cond))
    return false;
  if (!equalStmt(a->then_branch, b->then_branch) || !equalStmt(a->else_branch, b->else_branch))
    return false;
  for (std::size_t i = 0; i < a->body.size(); ++i)
    if (!equalStmt(a->body[i], b->body[i])) return false;
  return true;
}

}  // namespace

bool structurallyEqual(const TranslationUnit& a, const TranslationUnit& b) {
  if (a.functions.size() != b.functions.size()) return false;
  for (std::size_t i = 0; i < a.functions.size(); ++i) {
    const Function& f = a.functions[i];
    const Function& g = b.functions[i];
    if (f.name != g.name || !(f.return_type == g.return_type) || f.params != g.params ||
        f.locals.size() != g.locals.size())
      return false;
    for (std::size_t j = 0; j < f.locals.size(); ++j) {
      const LocalVar& u = f.locals[j];
      const LocalVar& v = g.locals[j];
      if (u.name != v.name || u.unique_name != v.unique_name || !(u.type == v.type) ||
          u.is_param != v.is_param || u.is_temp != v.is_temp)
        return false;
    }
    if (!equalStmt(f.body, g.body)) return false;
  }
  return true;
}

}  // namespace refutelint::frontend::ast
