#include "refutelint/ir/bitvec.h"

namespace refutelint::ir {

std::string_view opName(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "neg";
    case UnaryOp::BitNot: return "bitnot";
    case UnaryOp::LogNot: return "lognot";
  }
  return "?";
}

std::string_view opName(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "add";
    case BinaryOp::Sub: return "sub";
    case BinaryOp::Mul: return "mul";
    case BinaryOp::UDiv: return "udiv";
    case BinaryOp::SDiv: return "sdiv";
    case BinaryOp::URem: return "urem";
    case BinaryOp::SRem: return "srem";
    case BinaryOp::And: return "and";
    case BinaryOp::Or: return "or";
    case BinaryOp::Xor: return "xor";
    case BinaryOp::Shl: return "shl";
    case BinaryOp::LShr: return "lshr";
    case BinaryOp::AShr: return "ashr";
    case BinaryOp::Ult: return "ult";
    case BinaryOp::Ule: return "ule";
    case BinaryOp::Ugt: return "ugt";
    case BinaryOp::Uge: return "uge";
    case BinaryOp::Slt: return "slt";
    case BinaryOp::Sle: return "sle";
    case BinaryOp::Sgt: return "sgt";
    case BinaryOp::Sge: return "sge";
    case BinaryOp::Eq: return "eq";
    case BinaryOp::Ne: return "ne";
  }
  return "?";
}

BinaryOp negateComparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::Ult: return BinaryOp::Uge;
    case BinaryOp::Ule: return BinaryOp::Ugt;
    case BinaryOp::Ugt: return BinaryOp::Ule;
    case BinaryOp::Uge: return BinaryOp::Ult;
    case BinaryOp::Slt: return BinaryOp::Sge;
    case BinaryOp::Sle: return BinaryOp::Sgt;
    case BinaryOp::Sgt: return BinaryOp::Sle;
    case BinaryOp::Sge: return BinaryOp::Slt;
    case BinaryOp::Eq: return BinaryOp::Ne;
    case BinaryOp::Ne: return BinaryOp::Eq;
    default: throw std::invalid_argument("not a comparison: " + std::string(opName(op)));
  }
}

BinaryOp swapComparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::Ult: return BinaryOp::Ugt;
    case BinaryOp::Ule: return BinaryOp::Uge;
    case BinaryOp::Ugt: return BinaryOp::Ult;
    case BinaryOp::Uge: return BinaryOp::Ule;
    case BinaryOp::Slt: return BinaryOp::Sgt;
    case BinaryOp::Sle: return BinaryOp::Sge;
    case BinaryOp::Sgt: return BinaryOp::Slt;
    case BinaryOp::Sge: return BinaryOp::Sle;
    case BinaryOp::Eq: return BinaryOp::Eq;
    case BinaryOp::Ne: return BinaryOp::Ne;
    default: throw std::invalid_argument("not a comparison: " + std::string(opName(op)));
  }
}

uint64_t applyUnary(UnaryOp op, unsigned width, uint64_t value) {
  const uint64_t mask = widthMask(width);
  value &= mask;
  switch (op) {
    case UnaryOp::Neg: return (~value + 1) & mask;
    case UnaryOp::BitNot: return ~value & mask;
    case UnaryOp::LogNot: return value == 0 ? 1 : 0;
  }
  return 0;
}

uint64_t applyBinary(BinaryOp op, unsigned width, uint64_t a, uint64_t b) {
  const uint64_t mask = widthMask(width);
  a &= mask;
  b &= mask;
  const int64_t sa = toSigned(width, a);
  const int64_t sb = toSigned(width, b);
  switch (op) {
    case BinaryOp::Add: return (a + b) & mask;
    case BinaryOp::Sub: return (a - b) & mask;
    case BinaryOp::Mul: return (a * b) & mask;
    case BinaryOp::UDiv: return b == 0 ? mask : a / b;
    case BinaryOp::URem: return b == 0 ? a : a % b;
    case BinaryOp::SDiv: {
      if (b == 0) return sa < 0 ? 1 : mask;
      // Magnitudes as unsigned so INT64_MIN / -1 wraps instead of trapping.
      const uint64_t ma = sa < 0 ? (~a + 1) & mask : a;
      const uint64_t mb = sb < 0 ? (~b + 1) & mask : b;
      const uint64_t q = ma / mb;
      return ((sa < 0) != (sb < 0) ? ~q + 1 : q) & mask;
    }
    case BinaryOp::SRem: {
      if (b == 0) return a;
      const uint64_t ma = sa < 0 ? (~a + 1) & mask : a;
      const uint64_t mb = sb < 0 ? (~b + 1) & mask : b;
      const uint64_t r = ma % mb;
      return (sa < 0 ? ~r + 1 : r) & mask;
    }
    case BinaryOp::And: return a & b;
    case BinaryOp::Or: return a | b;
    case BinaryOp::Xor: return a ^ b;
    case BinaryOp::Shl: return b >= width ? 0 : (a << b) & mask;
    case BinaryOp::LShr: return b >= width ? 0 : a >> b;
    case BinaryOp::AShr: {
      if (b >= width) return sa < 0 ? mask : 0;
      return static_cast<uint64_t>(sa >> b) & mask;
    }
    case BinaryOp::Ult: return a < b;
    case BinaryOp::Ule: return a <= b;
    case BinaryOp::Ugt: return a > b;
    case BinaryOp::Uge: return a >= b;
    case BinaryOp::Slt: return sa < sb;
    case BinaryOp::Sle: return sa <= sb;
    case BinaryOp::Sgt: return sa > sb;
    case BinaryOp::Sge: return sa >= sb;
    case BinaryOp::Eq: return a == b;
    case BinaryOp::Ne: return a != b;
  }
  return 0;
}

uint64_t applyCast(unsigned from_width, unsigned to_width, bool sign_extend, uint64_t value) {
  value &= widthMask(from_width);
  if (to_width <= from_width) return value & widthMask(to_width);
  if (sign_extend) return static_cast<uint64_t>(toSigned(from_width, value)) & widthMask(to_width);
  return value;
}

BitVecValue::BitVecValue(unsigned width, uint64_t bits) : width_(width), bits_(bits & widthMask(width)) {
  if (!isSupportedWidth(width)) throw UnsupportedWidth(width);
}

std::string BitVecValue::str() const {
  return std::to_string(bits_) + ":" + std::to_string(width_);
}

BitVecValue evalConst(BinaryOp op, const BitVecValue& lhs, const BitVecValue& rhs) {
  if (lhs.width() != rhs.width())
    throw std::invalid_argument("evalConst: operand widths differ");
  if (isDivision(op) && rhs.isZero()) throw DivisionByZero();
  const uint64_t bits = applyBinary(op, lhs.width(), lhs.bits(), rhs.bits());
  return {isComparison(op) ? 1u : lhs.width(), bits};
}

BitVecValue evalConst(UnaryOp op, const BitVecValue& operand) {
  const uint64_t bits = applyUnary(op, operand.width(), operand.bits());
  return {op == UnaryOp::LogNot ? 1u : operand.width(), bits};
}

}  // namespace refutelint::ir
