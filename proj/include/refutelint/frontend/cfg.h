#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "refutelint/frontend/ast.h"

namespace refutelint::frontend {

/// Straight-line statement inside a basic block. Expressions contain no
/// calls and no `&&`/`||`; those are hoisted into Call statements and
/// branches over temporaries during lowering.
struct CfgStmt {
  enum class Kind {
    Declare,  // local without initializer: var
    Assign,   // var = value
    Store,    // *target = value   (target is the pointer operand)
    Eval,     // value evaluated for its checks only
    Call,     // [var =] callee(args)
  };

  Kind kind = Kind::Eval;
  SourceLoc loc;
  int var = -1;
  ast::ExprPtr target;
  ast::ExprPtr value;
  std::string callee;
  std::vector<ast::ExprPtr> args;
  SourceLoc call_loc;
  ast::ExprPtr deref;  // Store: the `*p` expression, for diagnostics
};

struct Terminator {
  enum class Kind { Goto, Branch, Return };

  Kind kind = Kind::Return;
  SourceLoc loc;
  std::size_t target = 0;        // Goto target / Branch true successor
  std::size_t false_target = 0;  // Branch false successor
  bool back_edge = false;        // Goto closing a loop body
  ast::ExprPtr cond;             // Branch: atomic condition (no && / ||)
  ast::ExprPtr value;            // Return value, if any
};

struct BasicBlock {
  std::size_t id = 0;
  std::vector<CfgStmt> stmts;
  Terminator term;
};

struct FunctionCfg {
  std::string name;
  Type return_type;
  std::vector<int> params;
  std::vector<ast::LocalVar> locals;  // source locals plus lowering temporaries
  std::vector<BasicBlock> blocks;
  std::size_t entry = 0;

  std::vector<std::size_t> exits() const;
  std::vector<std::size_t> successors(std::size_t block) const;
};

struct Signature {
  std::string name;
  Type return_type;
  std::vector<Type> params;
  bool defined = false;
};

/// All functions of one translation unit after lowering.
struct Program {
  std::vector<FunctionCfg> functions;
  std::map<std::string, Signature> signatures;

  const FunctionCfg* find(const std::string& name) const;
};

FunctionCfg lower(const ast::Function& fn);
Program lower(const ast::TranslationUnit& tu);

/// Human-readable dump used by tests and `--dump-cfg`.
std::string dump(const FunctionCfg& cfg);

}  // namespace refutelint::frontend
