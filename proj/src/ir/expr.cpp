#include "refutelint/ir/expr.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace refutelint::ir {

namespace {

std::size_t hashCombine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t computeHash(unsigned width, const auto& payload) {
  std::size_t h = hashCombine(payload.index(), width);
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BitVecValue>) {
          h = hashCombine(h, std::hash<uint64_t>{}(p.bits()));
        } else if constexpr (std::is_same_v<T, Symbol>) {
          h = hashCombine(h, p.id);
        } else if constexpr (std::is_same_v<T, Expr::CastData>) {
          h = hashCombine(hashCombine(h, p.sign_extend), p.operand->hash());
        } else if constexpr (std::is_same_v<T, Expr::UnaryData>) {
          h = hashCombine(hashCombine(h, static_cast<std::size_t>(p.op)), p.operand->hash());
        } else {
          h = hashCombine(hashCombine(h, static_cast<std::size_t>(p.op)), p.lhs->hash());
          h = hashCombine(h, p.rhs->hash());
        }
      },
      payload);
  return h;
}

}  // namespace

Symbol SymbolFactory::make(unsigned width, Signedness signedness, std::string origin, SourceLoc loc) {
  if (!isSupportedWidth(width)) throw UnsupportedWidth(width);
  return Symbol{next_id_++, width, signedness, std::move(origin), loc};
}

Expr::Expr(unsigned width, Payload payload)
    : width_(width), payload_(std::move(payload)), hash_(computeHash(width_, payload_)) {}

ExprRef Expr::makeConst(BitVecValue value) {
  const unsigned w = value.width();
  return ExprRef(new Expr(w, std::move(value)));
}

ExprRef Expr::makeSym(Symbol symbol) {
  if (!isSupportedWidth(symbol.width)) throw UnsupportedWidth(symbol.width);
  const unsigned w = symbol.width;
  return ExprRef(new Expr(w, std::move(symbol)));
}

ExprRef Expr::makeCast(unsigned width, bool sign_extend, ExprRef operand) {
  if (!isSupportedWidth(width)) throw UnsupportedWidth(width);
  return ExprRef(new Expr(width, CastData{sign_extend, std::move(operand)}));
}

ExprRef Expr::makeUnary(UnaryOp op, ExprRef operand) {
  const unsigned w = op == UnaryOp::LogNot ? 1 : operand->width();
  return ExprRef(new Expr(w, UnaryData{op, std::move(operand)}));
}

ExprRef Expr::makeBinary(BinaryOp op, ExprRef lhs, ExprRef rhs) {
  if (lhs->width() != rhs->width())
    throw std::invalid_argument("binary operand widths differ: " + toString(*lhs) + " vs " +
                                toString(*rhs));
  const unsigned w = ir::isComparison(op) ? 1 : lhs->width();
  return ExprRef(new Expr(w, BinaryData{op, std::move(lhs), std::move(rhs)}));
}

int compare(const Expr& a, const Expr& b) {
  if (&a == &b) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.width() != b.width()) return a.width() < b.width() ? -1 : 1;
  auto cmp = [](auto x, auto y) { return x < y ? -1 : (y < x ? 1 : 0); };
  switch (a.kind()) {
    case ExprKind::Const: return cmp(a.constant().bits(), b.constant().bits());
    case ExprKind::Sym: return cmp(a.symbol().id, b.symbol().id);
    case ExprKind::Cast:
      if (int c = cmp(a.cast().sign_extend, b.cast().sign_extend)) return c;
      return compare(*a.cast().operand, *b.cast().operand);
    case ExprKind::Unary:
      if (int c = cmp(a.unary().op, b.unary().op)) return c;
      return compare(*a.unary().operand, *b.unary().operand);
    case ExprKind::Binary:
      if (int c = cmp(a.binary().op, b.binary().op)) return c;
      if (int c = compare(*a.binary().lhs, *b.binary().lhs)) return c;
      return compare(*a.binary().rhs, *b.binary().rhs);
  }
  return 0;
}

bool operator==(const Expr& a, const Expr& b) {
  if (&a == &b) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

std::string toString(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Const: return e.constant().str();
    case ExprKind::Sym: return e.symbol().name();
    case ExprKind::Cast: {
      const auto& c = e.cast();
      std::string op = e.width() <= c.operand->width() ? "trunc"
                       : c.sign_extend                  ? "sext"
                                                        : "zext";
      return "(" + op + std::to_string(e.width()) + " " + toString(*c.operand) + ")";
    }
    case ExprKind::Unary:
      return "(" + std::string(opName(e.unary().op)) + " " + toString(*e.unary().operand) + ")";
    case ExprKind::Binary:
      return "(" + std::string(opName(e.binary().op)) + " " + toString(*e.binary().lhs) + " " +
             toString(*e.binary().rhs) + ")";
  }
  return "?";
}

ExprRef mkConst(BitVecValue value) { return Expr::makeConst(value); }
ExprRef mkConst(unsigned width, uint64_t bits) { return Expr::makeConst(BitVecValue(width, bits)); }
ExprRef mkBool(bool value) { return mkConst(1, value ? 1 : 0); }
ExprRef mkSym(const Symbol& symbol) { return Expr::makeSym(symbol); }

ExprRef mkCast(ExprRef operand, unsigned width, bool sign_extend) {
  const unsigned from = operand->width();
  if (from == width) return operand;
  if (operand->isConst())
    return mkConst(width, applyCast(from, width, sign_extend, operand->constant().bits()));
  if (operand->kind() == ExprKind::Cast) {
    const auto& inner = operand->cast();
    const unsigned inner_from = inner.operand->width();
    // Truncating back to the original width undoes an extension.
    if (width == inner_from && from > inner_from) return inner.operand;
    // Chained extensions of the same flavour collapse.
    if (width > from && from > inner_from && inner.sign_extend == sign_extend)
      return Expr::makeCast(width, sign_extend, inner.operand);
  }
  return Expr::makeCast(width, sign_extend, std::move(operand));
}

ExprRef mkUnary(UnaryOp op, ExprRef operand) {
  if (operand->isConst())
    return mkConst(evalConst(op, operand->constant()));
  if (operand->kind() == ExprKind::Unary) {
    const auto& inner = operand->unary();
    if ((op == UnaryOp::Neg || op == UnaryOp::BitNot) && inner.op == op) return inner.operand;
  }
  if (op == UnaryOp::LogNot) {
    // !(a cmp b) == (a !cmp b)
    if (operand->isComparison()) {
      const auto& b = operand->binary();
      return mkBinary(negateComparison(b.op), b.lhs, b.rhs);
    }
    return mkBinary(BinaryOp::Eq, operand, mkConst(operand->width(), 0));
  }
  return Expr::makeUnary(op, std::move(operand));
}

ExprRef mkNot(ExprRef condition) {
  if (condition->width() != 1) throw std::invalid_argument("mkNot expects a width-1 condition");
  return mkUnary(UnaryOp::LogNot, std::move(condition));
}

ExprRef mkBinary(BinaryOp op, ExprRef lhs, ExprRef rhs) {
  if (lhs->width() != rhs->width())
    throw std::invalid_argument("binary operand widths differ: " + toString(*lhs) + " vs " +
                                toString(*rhs));
  const unsigned w = lhs->width();
  if (lhs->isConst() && rhs->isConst()) {
    // Leave x/0 symbolic; the division checker owns that case.
    if (!(isDivision(op) && rhs->constant().isZero()))
      return mkConst(evalConst(op, lhs->constant(), rhs->constant()));
  }
  // Constants go on the right for commutative operators and comparisons.
  if (lhs->isConst() && !rhs->isConst()) {
    if (isCommutative(op)) std::swap(lhs, rhs);
    else if (isComparison(op)) {
      op = swapComparison(op);
      std::swap(lhs, rhs);
    }
  }
  const bool same = *lhs == *rhs;
  const bool rhs_zero = rhs->isConst() && rhs->constant().isZero();
  const bool rhs_one = rhs->isConst() && rhs->constant().bits() == 1;
  switch (op) {
    case BinaryOp::Add:
    case BinaryOp::Or:
    case BinaryOp::Xor:
    case BinaryOp::Shl:
    case BinaryOp::LShr:
    case BinaryOp::AShr:
      if (rhs_zero) return lhs;
      if (same && op == BinaryOp::Xor) return mkConst(w, 0);
      if (same && op == BinaryOp::Or) return lhs;
      break;
    case BinaryOp::Sub:
      if (rhs_zero) return lhs;
      if (same) return mkConst(w, 0);
      break;
    case BinaryOp::Mul:
      if (rhs_zero) return rhs;
      if (rhs_one) return lhs;
      break;
    case BinaryOp::And:
      if (rhs_zero) return rhs;
      if (same) return lhs;
      if (rhs->isConst() && rhs->constant().bits() == widthMask(w)) return lhs;
      break;
    case BinaryOp::UDiv:
    case BinaryOp::SDiv:
      if (rhs_one) return lhs;
      break;
    case BinaryOp::Eq:
    case BinaryOp::Ule:
    case BinaryOp::Uge:
    case BinaryOp::Sle:
    case BinaryOp::Sge:
      if (same) return mkBool(true);
      break;
    case BinaryOp::Ne:
    case BinaryOp::Ult:
    case BinaryOp::Ugt:
    case BinaryOp::Slt:
    case BinaryOp::Sgt:
      if (same) return mkBool(false);
      break;
    default:
      break;
  }
  return Expr::makeBinary(op, std::move(lhs), std::move(rhs));
}

std::vector<Symbol> collectSymbols(const Expr& e) {
  std::vector<Symbol> out;
  std::set<uint32_t> seen;
  std::function<void(const Expr&)> walk = [&](const Expr& x) {
    switch (x.kind()) {
      case ExprKind::Const: return;
      case ExprKind::Sym:
        if (seen.insert(x.symbol().id).second) out.push_back(x.symbol());
        return;
      case ExprKind::Cast: walk(*x.cast().operand); return;
      case ExprKind::Unary: walk(*x.unary().operand); return;
      case ExprKind::Binary:
        walk(*x.binary().lhs);
        walk(*x.binary().rhs);
        return;
    }
  };
  walk(e);
  return out;
}

std::size_t operatorCount(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Const:
    case ExprKind::Sym: return 0;
    case ExprKind::Cast: return operatorCount(*e.cast().operand);
    case ExprKind::Unary: return 1 + operatorCount(*e.unary().operand);
    case ExprKind::Binary: return 1 + operatorCount(*e.binary().lhs) + operatorCount(*e.binary().rhs);
  }
  return 0;
}

}  // namespace refutelint::ir
