#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "refutelint/ir/bitvec.h"
#include "refutelint/support/source_loc.h"

namespace refutelint::ir {

enum class Signedness { Unsigned, Signed };

/// An unknown value introduced during exploration. Rendered `$<id>`.
struct Symbol {
  uint32_t id = 0;
  unsigned width = 32;
  Signedness signedness = Signedness::Unsigned;
  std::string origin;  // variable name (or description) that introduced it
  SourceLoc origin_loc;

  std::string name() const { return "$" + std::to_string(id); }
};

/// Hands out symbols with strictly increasing ids. One factory per exploded
/// graph; not thread-safe.
class SymbolFactory {
 public:
  Symbol make(unsigned width, Signedness signedness, std::string origin, SourceLoc loc = {});
  uint32_t count() const { return next_id_; }

 private:
  uint32_t next_id_ = 0;
};

enum class ExprKind { Const, Sym, Cast, Unary, Binary };

class Expr;
using ExprRef = std::shared_ptr<const Expr>;

/// Immutable symbolic expression. Build through the mk* functions below,
/// which fold constants and apply a few algebraic identities.
class Expr {
 public:
  struct CastData {
    bool sign_extend;
    ExprRef operand;
  };
  struct UnaryData {
    UnaryOp op;
    ExprRef operand;
  };
  struct BinaryData {
    BinaryOp op;
    ExprRef lhs, rhs;
  };

  ExprKind kind() const { return static_cast<ExprKind>(payload_.index()); }
  unsigned width() const { return width_; }
  std::size_t hash() const { return hash_; }

  bool isConst() const { return kind() == ExprKind::Const; }
  bool isSym() const { return kind() == ExprKind::Sym; }
  bool isComparison() const {
    return kind() == ExprKind::Binary && ir::isComparison(binary().op);
  }

  const BitVecValue& constant() const { return std::get<BitVecValue>(payload_); }
  const Symbol& symbol() const { return std::get<Symbol>(payload_); }
  const CastData& cast() const { return std::get<CastData>(payload_); }
  const UnaryData& unary() const { return std::get<UnaryData>(payload_); }
  const BinaryData& binary() const { return std::get<BinaryData>(payload_); }

  // Raw constructors; prefer the mk* builders.
  static ExprRef makeConst(BitVecValue value);
  static ExprRef makeSym(Symbol symbol);
  static ExprRef makeCast(unsigned width, bool sign_extend, ExprRef operand);
  static ExprRef makeUnary(UnaryOp op, ExprRef operand);
  static ExprRef makeBinary(BinaryOp op, ExprRef lhs, ExprRef rhs);

 private:
  using Payload = std::variant<BitVecValue, Symbol, CastData, UnaryData, BinaryData>;
  Expr(unsigned width, Payload payload);

  unsigned width_;
  Payload payload_;
  std::size_t hash_;
};

bool operator==(const Expr& a, const Expr& b);
/// Total structural order (independent of pointer identity).
int compare(const Expr& a, const Expr& b);

/// Canonical prefix form, e.g. `(ne (and $0 1:32) 0:32)`.
std::string toString(const Expr& e);
inline std::string toString(const ExprRef& e) { return toString(*e); }

/// Key adaptors for containers of ExprRef.
struct ExprRefHash {
  std::size_t operator()(const ExprRef& e) const { return e->hash(); }
};
struct ExprRefEqual {
  bool operator()(const ExprRef& a, const ExprRef& b) const { return a == b || *a == *b; }
};
struct ExprRefLess {
  bool operator()(const ExprRef& a, const ExprRef& b) const { return compare(*a, *b) < 0; }
};

ExprRef mkConst(BitVecValue value);
ExprRef mkConst(unsigned width, uint64_t bits);
ExprRef mkBool(bool value);
ExprRef mkSym(const Symbol& symbol);
/// Zero/sign extension to a wider width, truncation to a narrower one.
ExprRef mkCast(ExprRef operand, unsigned width, bool sign_extend);
ExprRef mkUnary(UnaryOp op, ExprRef operand);
ExprRef mkBinary(BinaryOp op, ExprRef lhs, ExprRef rhs);
/// Width-1 logical negation of a width-1 condition.
ExprRef mkNot(ExprRef condition);

/// Symbols occurring in `e`, deduplicated, in order of first occurrence.
std::vector<Symbol> collectSymbols(const Expr& e);
/// Number of Unary/Binary nodes in `e`.
std::size_t operatorCount(const Expr& e);

}  // namespace refutelint::ir
