#include <sstream>

#include "refutelint/frontend/parser.h"

namespace refutelint::frontend {

using namespace ast;

namespace {

std::string declarator(const Type& t, const std::string& name) {
  std::string s = t.str();
  if (name.empty()) return s;
  return s.back() == '*' ? s + name : s + " " + name;
}

class Printer {
 public:
  std::string run(const TranslationUnit& tu) {
    for (std::size_t i = 0; i < tu.functions.size(); ++i) {
      if (i) out_ << "\n";
      function(tu.functions[i]);
    }
    return out_.str();
  }

  static std::string expr(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::IntLiteral: return e.text;
      case Expr::Kind::VarRef: return e.text;
      case Expr::Kind::Cast:
        if (e.implicit) return expr(e.operand());
        return "((" + e.type.str() + ")" + expr(e.operand()) + ")";
      case Expr::Kind::Unary:
        return std::string("(") + spelling(e.unary_op) + expr(e.operand()) + ")";
      case Expr::Kind::Binary:
        return "(" + expr(e.operand(0)) + " " + spelling(e.binary_op) + " " + expr(e.operand(1)) + ")";
      case Expr::Kind::Call: {
        std::string s = e.text + "(";
        for (std::size_t i = 0; i < e.operands.size(); ++i) {
          if (i) s += ", ";
          s += expr(*e.operands[i]);
        }
        return s + ")";
      }
    }
    return "?";
  }

 private:
  void function(const Function& f) {
    out_ << declarator(f.return_type, f.name) << "(";
    if (f.params.empty()) out_ << "void";
    for (std::size_t i = 0; i < f.params.size(); ++i) {
      if (i) out_ << ", ";
      out_ << declarator(f.param(i).type, f.param(i).name);
    }
    out_ << ")";
    if (!f.isDefined()) {
      out_ << ";\n";
      return;
    }
    fn_ = &f;
    out_ << " ";
    block(*f.body, 0);
    out_ << "\n";
  }

  void indent(int depth) { out_ << std::string(2 * depth, ' '); }

  void block(const Stmt& b, int depth) {
    out_ << "{\n";
    for (const auto& s : b.body) statement(*s, depth + 1);
    indent(depth);
    out_ << "}";
  }

  // Prints a branch body; blocks open on the same line, other statements on
  // their own indented line.
  void branch(const Stmt& s, int depth) {
    if (s.kind == Stmt::Kind::Block) {
      out_ << " ";
      block(s, depth);
      out_ << "\n";
    } else {
      out_ << "\n";
      statement(s, depth + 1);
    }
  }

  void statement(const Stmt& s, int depth) {
    indent(depth);
    switch (s.kind) {
      case Stmt::Kind::Decl: {
        const LocalVar& v = fn_->locals.at(s.var);
        out_ << declarator(v.type, v.name);
        if (s.value) out_ << " = " << expr(*s.value);
        out_ << ";\n";
        return;
      }
      case Stmt::Kind::Assign:
        out_ << expr(*s.target) << " = " << expr(*s.value) << ";\n";
        return;
      case Stmt::Kind::ExprStmt:
        out_ << expr(*s.value) << ";\n";
        return;
      case Stmt::Kind::Return:
        out_ << "return";
        if (s.value) out_ << " " << expr(*s.value);
        out_ << ";\n";
        return;
      case Stmt::Kind::Block:
        block(s, depth);
        out_ << "\n";
        return;
      case Stmt::Kind::While:
        out_ << "while (" << expr(*s.cond) << ")";
        branch(*s.then_branch, depth);
        return;
      case Stmt::Kind::If:
        out_ << "if (" << expr(*s.cond) << ")";
        branch(*s.then_branch, depth);
        if (s.else_branch) {
          indent(depth);
          out_ << "else";
          branch(*s.else_branch, depth);
        }
        return;
    }
  }

  std::ostringstream out_;
  const Function* fn_ = nullptr;
};

}  // namespace

std::string print(const TranslationUnit& tu) { return Printer().run(tu); }
std::string print(const Expr& e) { return Printer::expr(e); }

}  // namespace refutelint::frontend
