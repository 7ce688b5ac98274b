#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace refutelint::ir {

class UnsupportedWidth : public std::invalid_argument {
 public:
  explicit UnsupportedWidth(unsigned width)
      : std::invalid_argument("unsupported bit width " + std::to_string(width)) {}
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in constant evaluation") {}
};

constexpr bool isSupportedWidth(unsigned width) {
  return width == 1 || width == 8 || width == 32 || width == 64;
}

constexpr uint64_t widthMask(unsigned width) {
  return width >= 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
}

constexpr uint64_t signBit(unsigned width) { return uint64_t{1} << (width - 1); }

// Reinterprets the low `width` bits as a two's-complement integer.
constexpr int64_t toSigned(unsigned width, uint64_t bits) {
  bits &= widthMask(width);
  if (width < 64 && (bits & signBit(width)))
    return static_cast<int64_t>(bits | ~widthMask(width));
  return static_cast<int64_t>(bits);
}

enum class UnaryOp { Neg, BitNot, LogNot };

enum class BinaryOp {
  Add, Sub, Mul, UDiv, SDiv, URem, SRem,
  And, Or, Xor, Shl, LShr, AShr,
  Ult, Ule, Ugt, Uge, Slt, Sle, Sgt, Sge, Eq, Ne,
};

std::string_view opName(UnaryOp op);
std::string_view opName(BinaryOp op);

constexpr bool isComparison(BinaryOp op) { return op >= BinaryOp::Ult; }
constexpr bool isDivision(BinaryOp op) {
  return op == BinaryOp::UDiv || op == BinaryOp::SDiv || op == BinaryOp::URem ||
         op == BinaryOp::SRem;
}
constexpr bool isCommutative(BinaryOp op) {
  return op == BinaryOp::Add || op == BinaryOp::Mul || op == BinaryOp::And ||
         op == BinaryOp::Or || op == BinaryOp::Xor || op == BinaryOp::Eq ||
         op == BinaryOp::Ne;
}
constexpr bool isSignedComparison(BinaryOp op) {
  return op == BinaryOp::Slt || op == BinaryOp::Sle || op == BinaryOp::Sgt ||
         op == BinaryOp::Sge;
}

// The comparison that holds exactly when `op` does not.
BinaryOp negateComparison(BinaryOp op);
// The comparison with operands swapped: (a op b) == (b swapped(op) a).
BinaryOp swapComparison(BinaryOp op);

/// Raw operations on `width`-bit patterns. Division by zero follows SMT-LIB:
/// udiv yields all ones, urem yields the dividend, sdiv yields -1 or 1
/// depending on the dividend's sign, srem yields the dividend. Shift amounts
/// at or above the width give 0 (shl, lshr) or the sign fill (ashr).
/// Comparisons return 0 or 1.
uint64_t applyUnary(UnaryOp op, unsigned width, uint64_t value);
uint64_t applyBinary(BinaryOp op, unsigned width, uint64_t lhs, uint64_t rhs);
uint64_t applyCast(unsigned from_width, unsigned to_width, bool sign_extend, uint64_t value);

/// Fixed-width two's-complement value.
class BitVecValue {
 public:
  BitVecValue(unsigned width, uint64_t bits);

  static BitVecValue fromSigned(unsigned width, int64_t value) {
    return {width, static_cast<uint64_t>(value)};
  }
  static BitVecValue zero(unsigned width) { return {width, 0}; }
  static BitVecValue ones(unsigned width) { return {width, ~uint64_t{0}}; }

  unsigned width() const { return width_; }
  uint64_t bits() const { return bits_; }
  int64_t asSigned() const { return toSigned(width_, bits_); }
  bool isZero() const { return bits_ == 0; }

  std::string str() const;  // "<unsigned decimal>:<width>"

  friend auto operator<=>(const BitVecValue&, const BitVecValue&) = default;
  friend bool operator==(const BitVecValue&, const BitVecValue&) = default;

 private:
  unsigned width_;
  uint64_t bits_;
};

/// Constant folding. Throws DivisionByZero for a zero divisor and
/// std::invalid_argument when operand widths differ.
BitVecValue evalConst(BinaryOp op, const BitVecValue& lhs, const BitVecValue& rhs);
BitVecValue evalConst(UnaryOp op, const BitVecValue& operand);

}  // namespace refutelint::ir
