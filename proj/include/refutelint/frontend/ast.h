#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "refutelint/frontend/types.h"
#include "refutelint/support/source_loc.h"

namespace refutelint::frontend {

class FrontendError : public std::runtime_error {
 public:
  FrontendError(SourceLoc loc, const std::string& message)
      : std::runtime_error(loc.str() + ": " + message), loc_(loc), message_(message) {}
  SourceLoc loc() const { return loc_; }
  const std::string& message() const { return message_; }

 private:
  SourceLoc loc_;
  std::string message_;
};

/// Malformed input, including type errors and undeclared names.
class SyntaxError : public FrontendError {
 public:
  using FrontendError::FrontendError;
};

/// Valid C that lies outside the MiniC subset.
class UnsupportedConstruct : public FrontendError {
 public:
  using FrontendError::FrontendError;
};

namespace ast {

enum class UnaryOperator { Neg, LogNot, BitNot, Deref, AddrOf };

enum class BinaryOperator {
  Add, Sub, Mul, Div, Rem, BitAnd, BitOr, BitXor, Shl, Shr,
  Lt, Le, Gt, Ge, Eq, Ne, LogAnd, LogOr,
};

const char* spelling(UnaryOperator op);
const char* spelling(BinaryOperator op);
inline bool isComparison(BinaryOperator op) {
  return op >= BinaryOperator::Lt && op <= BinaryOperator::Ne;
}
inline bool isLogical(BinaryOperator op) {
  return op == BinaryOperator::LogAnd || op == BinaryOperator::LogOr;
}

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { IntLiteral, VarRef, Unary, Binary, Cast, Call };

  Kind kind = Kind::IntLiteral;
  Type type;
  SourceLoc loc;        // first token
  uint32_t length = 1;  // columns covered on the first line
  SourceLoc op_loc;     // operator token for Unary/Binary

  uint64_t value = 0;    // IntLiteral
  std::string text;      // IntLiteral spelling; VarRef source name; Call callee
  int var = -1;          // VarRef: index into Function::locals
  UnaryOperator unary_op = UnaryOperator::Neg;
  BinaryOperator binary_op = BinaryOperator::Add;
  bool implicit = false;  // Cast inserted by the type checker
  std::vector<ExprPtr> operands;

  const Expr& operand(std::size_t i = 0) const { return *operands.at(i); }
  bool isNullLiteral() const { return kind == Kind::IntLiteral && value == 0; }
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
  enum class Kind { Decl, Assign, If, While, Return, ExprStmt, Block };

  Kind kind = Kind::Block;
  SourceLoc loc;
  int var = -1;              // Decl
  ExprPtr target;            // Assign: VarRef or Unary Deref
  ExprPtr value;             // Decl initializer, Assign rhs, Return value, ExprStmt
  ExprPtr cond;              // If / While
  StmtPtr then_branch;       // If then; While body
  StmtPtr else_branch;       // If else (optional)
  std::vector<StmtPtr> body;  // Block
};

struct LocalVar {
  std::string name;         // as written in the source
  std::string unique_name;  // distinct within the function (shadowing, temporaries)
  Type type;
  SourceLoc loc;
  bool is_param = false;
  bool is_temp = false;
};

struct Function {
  std::string name;
  Type return_type;
  std::vector<int> params;  // indices into locals
  std::vector<LocalVar> locals;
  StmtPtr body;  // null for a declaration without definition
  SourceLoc loc;

  bool isDefined() const { return body != nullptr; }
  const LocalVar& param(std::size_t i) const { return locals.at(params.at(i)); }
};

struct TranslationUnit {
  std::vector<Function> functions;  // definitions and external declarations, in source order

  const Function* find(const std::string& name) const;
  std::vector<const Function*> definitions() const;
};

/// Number of statements, counting nested ones but not blocks themselves.
std::size_t countStatements(const Stmt& s);

/// Structural equality ignoring source locations.
bool structurallyEqual(const TranslationUnit& a, const TranslationUnit& b);

}  // namespace ast

}  // namespace refutelint::frontend
