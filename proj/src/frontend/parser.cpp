#include "refutelint/frontend/parser.h"

#include <map>
#include <set>

#include "refutelint/frontend/lexer.h"

namespace refutelint::frontend {

using namespace ast;

namespace {

const std::set<std::string_view> kTypeKeywords = {"unsigned", "signed", "int", "char",
                                                  "long",     "_Bool",  "void"};
const std::set<std::string_view> kUnsupportedTypeKeywords = {
    "short", "float",  "double",   "struct", "union",    "enum",   "const", "volatile",
    "static", "extern", "typedef", "register", "inline", "restrict", "auto"};
const std::set<std::string_view> kUnsupportedStatements = {"for",   "do",       "switch", "case",
                                                           "default", "break", "continue", "goto"};

struct BinaryInfo {
  int precedence;
  BinaryOperator op;
};

const std::map<std::string_view, BinaryInfo> kBinaryOps = {
    {"||", {1, BinaryOperator::LogOr}},  {"&&", {2, BinaryOperator::LogAnd}},
    {"|", {3, BinaryOperator::BitOr}},   {"^", {4, BinaryOperator::BitXor}},
    {"&", {5, BinaryOperator::BitAnd}},  {"==", {6, BinaryOperator::Eq}},
    {"!=", {6, BinaryOperator::Ne}},     {"<", {7, BinaryOperator::Lt}},
    {"<=", {7, BinaryOperator::Le}},     {">", {7, BinaryOperator::Gt}},
    {">=", {7, BinaryOperator::Ge}},     {"<<", {8, BinaryOperator::Shl}},
    {">>", {8, BinaryOperator::Shr}},    {"+", {9, BinaryOperator::Add}},
    {"-", {9, BinaryOperator::Sub}},     {"*", {10, BinaryOperator::Mul}},
    {"/", {10, BinaryOperator::Div}},    {"%", {10, BinaryOperator::Rem}},
};

class Parser {
 public:
  explicit Parser(std::string_view source) : toks_(tokenize(source)) {}

  TranslationUnit run() {
    while (cur().kind != TokenKind::End) parseExternal();
    return std::move(tu_);
  }

 private:
  // ---- token helpers -------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& peekTok(std::size_t n = 1) const {
    return toks_[std::min(pos_ + n, toks_.size() - 1)];
  }
  const Token& prev() const { return toks_[pos_ - 1]; }
  const Token& take() { return toks_[pos_++]; }

  bool accept(std::string_view punct) {
    if (cur().isPunct(punct)) {
      ++pos_;
      return true;
    }
    return false;
  }

  const Token& expect(std::string_view punct) {
    if (!cur().isPunct(punct)) fail(cur(), "expected '" + std::string(punct) + "'");
    return take();
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    const std::string found = at.kind == TokenKind::End ? "end of input" : "'" + at.text + "'";
    throw SyntaxError(at.loc, msg + ", found " + found);
  }

  std::string expectIdentifier() {
    if (cur().kind != TokenKind::Identifier) fail(cur(), "expected identifier");
    return take().text;
  }

  void rejectUnsupportedPunct(const Token& t) const {
    static const std::set<std::string_view> bad = {"[", "]", ".", "->", "?", ":", "++", "--",
                                                   "+=", "-=", "*=", "/=", "%=", "&=", "|=",
                                                   "^=", "<<=", ">>=", "..."};
    if (t.kind == TokenKind::Punct && bad.count(t.text))
      throw UnsupportedConstruct(t.loc, "'" + t.text + "' is not supported in MiniC");
  }

  // ---- types ---------------------------------------------------------------

  bool atTypeStart() const {
    return cur().kind == TokenKind::Keyword &&
           (kTypeKeywords.count(cur().text) || kUnsupportedTypeKeywords.count(cur().text));
  }

  Type parseBaseType() {
    const Token start = cur();
    int n_unsigned = 0, n_signed = 0, n_int = 0, n_char = 0, n_long = 0, n_bool = 0, n_void = 0;
    while (cur().kind == TokenKind::Keyword) {
      const std::string& k = cur().text;
      if (kUnsupportedTypeKeywords.count(k))
        throw UnsupportedConstruct(cur().loc, "'" + k + "' is not supported in MiniC");
      if (!kTypeKeywords.count(k)) break;
      if (k == "unsigned") ++n_unsigned;
      else if (k == "signed") ++n_signed;
      else if (k == "int") ++n_int;
      else if (k == "char") ++n_char;
      else if (k == "long") ++n_long;
      else if (k == "_Bool") ++n_bool;
      else if (k == "void") ++n_void;
      ++pos_;
    }
    const bool sign_spec = n_unsigned + n_signed > 0;
    if (n_unsigned + n_signed > 1 || n_int > 1 || n_char > 1 || n_long > 2 || n_bool > 1 || n_void > 1)
      throw SyntaxError(start.loc, "invalid type specifier combination");
    if (n_void) {
      if (n_unsigned + n_signed + n_int + n_char + n_long + n_bool)
        throw SyntaxError(start.loc, "invalid type specifier combination");
      return Type::voidType();
    }
    if (n_bool) {
      if (sign_spec || n_int || n_char || n_long) throw SyntaxError(start.loc, "invalid type specifier combination");
      return Type::boolType();
    }
    if (n_char) {
      if (n_int || n_long) throw SyntaxError(start.loc, "invalid type specifier combination");
      return Type::integer(8, n_unsigned == 0);
    }
    if (n_long) return Type::integer(64, n_unsigned == 0);
    if (n_int || sign_spec) return Type::integer(32, n_unsigned == 0);
    fail(start, "expected type");
  }

  Type parsePointers(Type base) {
    while (accept("*")) base = Type::pointerTo(std::move(base));
    return base;
  }

  // ---- top level -----------------------------------------------------------

  void parseExternal() {
    if (!atTypeStart()) fail(cur(), "expected function declaration");
    const SourceLoc loc = cur().loc;
    const Type base = parseBaseType();
    const Type ret = parsePointers(base);
    const Token name_tok = cur();
    const std::string name = expectIdentifier();
    if (!cur().isPunct("("))
      throw UnsupportedConstruct(name_tok.loc, "global variables are not supported in MiniC");
    expect("(");

    Function fn;
    fn.name = name;
    fn.return_type = ret;
    fn.loc = loc;
    std::vector<std::pair<std::string, Type>> params;
    std::vector<SourceLoc> param_locs;
    if (cur().isKeyword("void") && peekTok().isPunct(")")) {
      ++pos_;
    } else if (!cur().isPunct(")")) {
      do {
        if (!atTypeStart()) fail(cur(), "expected parameter type");
        Type pt = parsePointers(parseBaseType());
        if (pt.isVoid()) throw SyntaxError(prev().loc, "parameter has void type");
        std::string pname;
        param_locs.push_back(cur().loc);
        if (cur().kind == TokenKind::Identifier) pname = take().text;
        params.emplace_back(pname, pt);
      } while (accept(","));
    }
    expect(")");

    for (std::size_t i = 0; i < params.size(); ++i) {
      LocalVar v;
      v.name = params[i].first;
      v.type = params[i].second;
      v.loc = param_locs[i];
      v.is_param = true;
      fn.params.push_back(static_cast<int>(fn.locals.size()));
      fn.locals.push_back(std::move(v));
    }
    uniquifyAll(fn);

    const int existing = findFunction(name);
    if (existing >= 0) {
      const Function& old = tu_.functions[existing];
      bool same = old.return_type == fn.return_type && old.params.size() == fn.params.size();
      for (std::size_t i = 0; same && i < fn.params.size(); ++i)
        same = old.param(i).type == fn.param(i).type;
      if (!same) throw SyntaxError(name_tok.loc, "conflicting types for '" + name + "'");
    }

    if (accept(";")) {
      if (existing < 0) {
        index_[name] = static_cast<int>(tu_.functions.size());
        tu_.functions.push_back(std::move(fn));
      }
      return;
    }
    if (!cur().isPunct("{")) fail(cur(), "expected ';' or function body");
    for (std::size_t i = 0; i < fn.params.size(); ++i)
      if (fn.param(i).name.empty())
        throw SyntaxError(param_locs[i], "parameter name omitted in function definition");

    int slot = existing;
    if (slot >= 0) {
      if (tu_.functions[slot].isDefined()) throw SyntaxError(name_tok.loc, "redefinition of '" + name + "'");
      tu_.functions[slot] = fn;
    } else {
      slot = static_cast<int>(tu_.functions.size());
      index_[name] = slot;
      tu_.functions.push_back(fn);
    }

    fn_ = &fn;
    scopes_.clear();
    scopes_.emplace_back();
    for (int idx : fn.params) scopes_.back()[fn.locals[idx].name] = idx;
    StmtPtr body = parseBlock();
    fn.body = body;
    fn_ = nullptr;
    tu_.functions[slot] = std::move(fn);
  }

  int findFunction(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  static void uniquifyAll(Function& fn) {
    std::map<std::string, int> seen;
    for (auto& v : fn.locals) {
      const int n = seen[v.name]++;
      v.unique_name = n == 0 ? v.name : v.name + "." + std::to_string(n);
    }
  }

  int declareLocal(const std::string& name, Type type, SourceLoc loc) {
    if (scopes_.back().count(name)) throw SyntaxError(loc, "redefinition of '" + name + "'");
    LocalVar v;
    v.name = name;
    v.type = std::move(type);
    v.loc = loc;
    int n = 0;
    for (const auto& other : fn_->locals)
      if (other.name == name) ++n;
    v.unique_name = n == 0 ? name : name + "." + std::to_string(n);
    const int idx = static_cast<int>(fn_->locals.size());
    fn_->locals.push_back(std::move(v));
    scopes_.back()[name] = idx;
    return idx;
  }

  std::optional<int> lookupLocal(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return f->second;
    }
    return std::nullopt;
  }

  // ---- statements ----------------------------------------------------------

  StmtPtr parseBlock() {
    auto block = std::make_shared<Stmt>();
    block->kind = Stmt::Kind::Block;
    block->loc = expect("{").loc;
    scopes_.emplace_back();
    while (!cur().isPunct("}")) {
      if (cur().kind == TokenKind::End) fail(cur(), "expected '}'");
      for (auto& s : parseBlockItem()) block->body.push_back(std::move(s));
    }
    expect("}");
    scopes_.pop_back();
    return block;
  }

  std::vector<StmtPtr> parseBlockItem() {
    if (atTypeStart()) return parseDeclaration();
    return {parseStatement()};
  }

  std::vector<StmtPtr> parseDeclaration() {
    const SourceLoc loc = cur().loc;
    const Type base = parseBaseType();
    std::vector<StmtPtr> out;
    do {
      Type t = parsePointers(base);
      const Token name_tok = cur();
      const std::string name = expectIdentifier();
      rejectUnsupportedPunct(cur());
      if (cur().isPunct("(")) throw UnsupportedConstruct(name_tok.loc, "local function declarations are not supported");
      if (t.isVoid()) throw SyntaxError(name_tok.loc, "variable '" + name + "' has void type");
      auto s = std::make_shared<Stmt>();
      s->kind = Stmt::Kind::Decl;
      s->loc = out.empty() ? loc : name_tok.loc;
      s->var = declareLocal(name, t, name_tok.loc);
      if (accept("=")) {
        ExprPtr init = parseExpr();
        s->value = convertForAssign(init, t, name_tok.loc);
      }
      out.push_back(std::move(s));
    } while (accept(","));
    expect(";");
    return out;
  }

  StmtPtr parseStatement() {
    const Token& t = cur();
    if (t.kind == TokenKind::Keyword && kUnsupportedStatements.count(t.text))
      throw UnsupportedConstruct(t.loc, "'" + t.text + "' statements are not supported in MiniC");
    if (t.kind == TokenKind::Keyword && t.text == "sizeof")
      throw UnsupportedConstruct(t.loc, "'sizeof' is not supported in MiniC");
    if (t.isPunct("{")) return parseBlock();
    auto s = std::make_shared<Stmt>();
    s->loc = t.loc;
    if (t.isPunct(";")) {
      ++pos_;
      s->kind = Stmt::Kind::Block;
      return s;
    }
    if (t.isKeyword("if")) {
      ++pos_;
      s->kind = Stmt::Kind::If;
      expect("(");
      s->cond = requireScalar(parseExpr(), "if condition");
      expect(")");
      s->then_branch = parseSubStatement();
      if (cur().isKeyword("else")) {
        ++pos_;
        s->else_branch = parseSubStatement();
      }
      return s;
    }
    if (t.isKeyword("while")) {
      ++pos_;
      s->kind = Stmt::Kind::While;
      expect("(");
      s->cond = requireScalar(parseExpr(), "while condition");
      expect(")");
      s->then_branch = parseSubStatement();
      return s;
    }
    if (t.isKeyword("return")) {
      const Token ret_tok = take();
      s->kind = Stmt::Kind::Return;
      const Type& rt = fn_->return_type;
      if (!cur().isPunct(";")) {
        ExprPtr v = parseExpr();
        if (rt.isVoid()) throw SyntaxError(ret_tok.loc, "void function should not return a value");
        s->value = convertForAssign(v, rt, v->loc);
      } else if (!rt.isVoid()) {
        throw SyntaxError(ret_tok.loc, "non-void function should return a value");
      }
      expect(";");
      return s;
    }

    ExprPtr e = parseExpr();
    rejectUnsupportedPunct(cur());
    if (cur().isPunct("=")) {
      const Token eq = take();
      const bool is_var = e->kind == Expr::Kind::VarRef;
      const bool is_deref = e->kind == Expr::Kind::Unary && e->unary_op == UnaryOperator::Deref;
      if (!is_var && !is_deref) throw SyntaxError(eq.loc, "expression is not assignable");
      ExprPtr rhs = parseExpr();
      s->kind = Stmt::Kind::Assign;
      s->target = e;
      s->value = convertForAssign(rhs, e->type, eq.loc);
    } else {
      s->kind = Stmt::Kind::ExprStmt;
      s->value = e;
    }
    expect(";");
    return s;
  }

  // A declaration is only valid as a block item, not directly under if/while.
  StmtPtr parseSubStatement() {
    if (atTypeStart()) fail(cur(), "expected statement");
    scopes_.emplace_back();
    StmtPtr s = parseStatement();
    scopes_.pop_back();
    return s;
  }

  // ---- expressions ---------------------------------------------------------

  std::shared_ptr<Expr> newExpr(Expr::Kind kind, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->loc = loc;
    return e;
  }

  void finish(Expr& e) const {
    const Token& last = prev();
    e.length = last.loc.line == e.loc.line && last.endColumn() > e.loc.column
                   ? last.endColumn() - e.loc.column
                   : 1;
  }

  static ExprPtr implicitCast(ExprPtr e, const Type& to) {
    if (e->type == to) return e;
    auto c = std::make_shared<Expr>();
    c->kind = Expr::Kind::Cast;
    c->implicit = true;
    c->type = to;
    c->loc = e->loc;
    c->length = e->length;
    c->operands = {std::move(e)};
    return c;
  }

  ExprPtr convertForAssign(ExprPtr e, const Type& to, SourceLoc loc) const {
    if (e->type.isVoid()) throw SyntaxError(loc, "void value used in assignment");
    if (to.isInteger() && e->type.isInteger()) return implicitCast(std::move(e), to);
    if (to.isPointer()) {
      if (e->type == to) return e;
      if (e->isNullLiteral()) return implicitCast(std::move(e), to);
    }
    throw SyntaxError(loc, "cannot convert '" + e->type.str() + "' to '" + to.str() + "'");
  }

  static ExprPtr requireScalar(ExprPtr e, const char* what) {
    if (!e->type.isScalar()) throw SyntaxError(e->loc, std::string(what) + " must have scalar type");
    return e;
  }

  ExprPtr parseExpr() { return parseBinary(1); }

  ExprPtr parseBinary(int min_prec) {
    ExprPtr lhs = parseUnary();
    while (true) {
      rejectUnsupportedPunct(cur());
      if (cur().kind != TokenKind::Punct) break;
      auto it = kBinaryOps.find(cur().text);
      if (it == kBinaryOps.end() || it->second.precedence < min_prec) break;
      const Token op_tok = take();
      ExprPtr rhs = parseBinary(it->second.precedence + 1);
      lhs = makeBinary(it->second.op, std::move(lhs), std::move(rhs), op_tok);
    }
    return lhs;
  }

  ExprPtr makeBinary(BinaryOperator op, ExprPtr l, ExprPtr r, const Token& op_tok) {
    auto e = newExpr(Expr::Kind::Binary, l->loc);
    e->binary_op = op;
    e->op_loc = op_tok.loc;
    const Type& lt = l->type;
    const Type& rt = r->type;
    if (lt.isVoid() || rt.isVoid()) throw SyntaxError(op_tok.loc, "void value used in expression");
    if (isLogical(op)) {
      e->type = Type::intType();
      e->operands = {std::move(l), std::move(r)};
    } else if (isComparison(op)) {
      e->type = Type::intType();
      if (lt.isInteger() && rt.isInteger()) {
        const Type common = commonType(lt, rt);
        e->operands = {implicitCast(std::move(l), common), implicitCast(std::move(r), common)};
      } else if (lt.isPointer() && rt.isPointer()) {
        if (!(lt == rt)) throw SyntaxError(op_tok.loc, "comparison of distinct pointer types");
        e->operands = {std::move(l), std::move(r)};
      } else if (lt.isPointer() && r->isNullLiteral()) {
        e->operands = {std::move(l), implicitCast(std::move(r), lt)};
      } else if (rt.isPointer() && l->isNullLiteral()) {
        e->operands = {implicitCast(std::move(l), rt), std::move(r)};
      } else {
        throw SyntaxError(op_tok.loc, "comparison between pointer and integer");
      }
    } else {
      if (lt.isPointer() || rt.isPointer())
        throw UnsupportedConstruct(op_tok.loc, "pointer arithmetic is not supported in MiniC");
      if (op == BinaryOperator::Shl || op == BinaryOperator::Shr) {
        const Type pt = promote(lt);
        e->type = pt;
        e->operands = {implicitCast(std::move(l), pt), implicitCast(std::move(r), pt)};
      } else {
        const Type common = commonType(lt, rt);
        e->type = common;
        e->operands = {implicitCast(std::move(l), common), implicitCast(std::move(r), common)};
      }
    }
    finish(*e);
    return e;
  }

  ExprPtr parseUnary() {
    const Token t = cur();
    rejectUnsupportedPunct(t);
    if (t.isPunct("+")) throw UnsupportedConstruct(t.loc, "unary '+' is not supported in MiniC");
    if (t.isKeyword("sizeof")) throw UnsupportedConstruct(t.loc, "'sizeof' is not supported in MiniC");
    static const std::map<std::string_view, UnaryOperator> unary = {
        {"-", UnaryOperator::Neg},   {"!", UnaryOperator::LogNot}, {"~", UnaryOperator::BitNot},
        {"*", UnaryOperator::Deref}, {"&", UnaryOperator::AddrOf},
    };
    if (t.kind == TokenKind::Punct) {
      auto it = unary.find(t.text);
      if (it != unary.end()) {
        ++pos_;
        ExprPtr operand = parseUnary();
        return makeUnary(it->second, std::move(operand), t);
      }
      if (t.isPunct("(") && peekTok().kind == TokenKind::Keyword &&
          (kTypeKeywords.count(peekTok().text) || kUnsupportedTypeKeywords.count(peekTok().text))) {
        ++pos_;
        Type to = parsePointers(parseBaseType());
        expect(")");
        ExprPtr operand = parseUnary();
        return makeExplicitCast(to, std::move(operand), t);
      }
    }
    return parsePostfix();
  }

  ExprPtr makeUnary(UnaryOperator op, ExprPtr operand, const Token& op_tok) {
    auto e = newExpr(Expr::Kind::Unary, op_tok.loc);
    e->unary_op = op;
    e->op_loc = op_tok.loc;
    const Type& ot = operand->type;
    switch (op) {
      case UnaryOperator::Neg:
      case UnaryOperator::BitNot:
        if (!ot.isInteger()) throw SyntaxError(op_tok.loc, "invalid operand to unary operator");
        e->type = promote(ot);
        operand = implicitCast(std::move(operand), e->type);
        break;
      case UnaryOperator::LogNot:
        if (!ot.isScalar()) throw SyntaxError(op_tok.loc, "invalid operand to '!'");
        e->type = Type::intType();
        break;
      case UnaryOperator::Deref:
        if (!ot.isPointer()) throw SyntaxError(op_tok.loc, "indirection requires pointer operand");
        if (ot.pointee->isVoid()) throw SyntaxError(op_tok.loc, "dereference of 'void *'");
        e->type = *ot.pointee;
        break;
      case UnaryOperator::AddrOf:
        if (operand->kind != Expr::Kind::VarRef)
          throw UnsupportedConstruct(op_tok.loc, "address-of is only supported on variables");
        e->type = Type::pointerTo(ot);
        break;
    }
    e->operands = {std::move(operand)};
    finish(*e);
    return e;
  }

  ExprPtr makeExplicitCast(const Type& to, ExprPtr operand, const Token& lparen) {
    auto e = newExpr(Expr::Kind::Cast, lparen.loc);
    e->type = to;
    const Type& from = operand->type;
    const bool ok = (to.isInteger() && from.isInteger()) ||
                    (to.isPointer() && operand->isNullLiteral()) || to == from;
    if (!ok) {
      if (to.isVoid()) throw UnsupportedConstruct(lparen.loc, "casts to void are not supported");
      throw UnsupportedConstruct(lparen.loc, "cast from '" + from.str() + "' to '" + to.str() +
                                                 "' is not supported in MiniC");
    }
    e->operands = {std::move(operand)};
    finish(*e);
    return e;
  }

  ExprPtr parsePostfix() {
    ExprPtr e = parsePrimary();
    rejectUnsupportedPunct(cur());
    return e;
  }

  ExprPtr parsePrimary() {
    const Token t = cur();
    if (t.kind == TokenKind::IntLiteral) {
      ++pos_;
      auto e = newExpr(Expr::Kind::IntLiteral, t.loc);
      e->value = t.value;
      e->text = t.text;
      e->type = literalType(t);
      finish(*e);
      return e;
    }
    if (t.kind == TokenKind::Identifier) {
      ++pos_;
      if (cur().isPunct("(")) return parseCall(t);
      auto e = newExpr(Expr::Kind::VarRef, t.loc);
      e->text = t.text;
      auto idx = lookupLocal(t.text);
      if (!idx) {
        if (findFunction(t.text) >= 0)
          throw UnsupportedConstruct(t.loc, "function designators used as values are not supported");
        throw SyntaxError(t.loc, "use of undeclared identifier '" + t.text + "'");
      }
      e->var = *idx;
      e->type = fn_->locals[*idx].type;
      finish(*e);
      return e;
    }
    if (t.isPunct("(")) {
      ++pos_;
      ExprPtr inner = parseExpr();
      expect(")");
      return inner;
    }
    rejectUnsupportedPunct(t);
    fail(t, "expected expression");
  }

  ExprPtr parseCall(const Token& name) {
    if (lookupLocal(name.text))
      throw SyntaxError(name.loc, "called object '" + name.text + "' is not a function");
    const int fi = findFunction(name.text);
    if (fi < 0) throw SyntaxError(name.loc, "call to undeclared function '" + name.text + "'");
    // Copy out: tu_.functions may be the function being parsed.
    std::vector<Type> param_types;
    Type ret;
    if (fn_ && fn_->name == name.text) {
      ret = fn_->return_type;
      for (std::size_t i = 0; i < fn_->params.size(); ++i) param_types.push_back(fn_->param(i).type);
    } else {
      const Function& callee = tu_.functions[fi];
      ret = callee.return_type;
      for (std::size_t i = 0; i < callee.params.size(); ++i) param_types.push_back(callee.param(i).type);
    }
    expect("(");
    std::vector<ExprPtr> args;
    if (!cur().isPunct(")")) {
      do {
        args.push_back(parseExpr());
      } while (accept(","));
    }
    expect(")");
    if (args.size() != param_types.size())
      throw SyntaxError(name.loc, "wrong number of arguments to '" + name.text + "': expected " +
                                      std::to_string(param_types.size()) + ", got " +
                                      std::to_string(args.size()));
    auto e = newExpr(Expr::Kind::Call, name.loc);
    e->text = name.text;
    e->type = ret;
    for (std::size_t i = 0; i < args.size(); ++i)
      e->operands.push_back(convertForAssign(args[i], param_types[i], args[i]->loc));
    finish(*e);
    return e;
  }

  static Type literalType(const Token& t) {
    const uint64_t v = t.value;
    auto fits_signed = [&](unsigned w) { return v <= (uint64_t{1} << (w - 1)) - 1; };
    auto fits_unsigned = [&](unsigned w) { return w == 64 || v <= (uint64_t{1} << w) - 1; };
    if (t.is_unsigned) return t.is_long || !fits_unsigned(32) ? Type::ulongType() : Type::uintType();
    if (!t.is_long) {
      if (fits_signed(32)) return Type::intType();
      if (!t.is_decimal && fits_unsigned(32)) return Type::uintType();
    }
    if (fits_signed(64)) return Type::longType();
    if (!t.is_decimal) return Type::ulongType();
    throw SyntaxError(t.loc, "integer literal is too large for type 'long'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  TranslationUnit tu_;
  std::map<std::string, int> index_;
  Function* fn_ = nullptr;
  std::vector<std::map<std::string, int>> scopes_;
};

}  // namespace

TranslationUnit parse(std::string_view source) { return Parser(source).run(); }

}  // namespace refutelint::frontend
