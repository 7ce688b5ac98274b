#include "sym_oracle.h"

#include <stdexcept>

namespace oracle {

using namespace refutelint;
using ir::BinaryOp;
using ir::ExprKind;
using refute::PathConstraint;

namespace {

uint64_t maskOf(unsigned w) { return w >= 64 ? ~0ull : (1ull << w) - 1; }

int64_t sx(uint64_t v, unsigned w) {
  if (w >= 64) return static_cast<int64_t>(v);
  const uint64_t sign = 1ull << (w - 1);
  v &= maskOf(w);
  return static_cast<int64_t>((v ^ sign) - sign);
}

}  // namespace

uint64_t evalExpr(const ir::Expr& e, const Assignment& env) {
  const unsigned w = e.width();
  const uint64_t m = maskOf(w);
  switch (e.kind()) {
    case ExprKind::Const: return e.constant().bits();
    case ExprKind::Sym: return env.at(e.symbol().id) & m;
    case ExprKind::Cast: {
      const auto& c = e.cast();
      const unsigned from = c.operand->width();
      const uint64_t v = evalExpr(*c.operand, env);
      if (c.sign_extend && w > from) return static_cast<uint64_t>(sx(v, from)) & m;
      return v & m;
    }
    case ExprKind::Unary: {
      const uint64_t v = evalExpr(*e.unary().operand, env);
      switch (e.unary().op) {
        case ir::UnaryOp::Neg: return (~v + 1) & m;
        case ir::UnaryOp::BitNot: return ~v & m;
        case ir::UnaryOp::LogNot: return v == 0;
      }
      break;
    }
    case ExprKind::Binary: {
      const auto& b = e.binary();
      const unsigned ow = b.lhs->width();
      const uint64_t om = maskOf(ow);
      const uint64_t x = evalExpr(*b.lhs, env), y = evalExpr(*b.rhs, env);
      const __int128 sx_ = sx(x, ow), sy = sx(y, ow);
      switch (b.op) {
        case BinaryOp::Add: return (x + y) & om;
        case BinaryOp::Sub: return (x - y) & om;
        case BinaryOp::Mul: return (x * y) & om;
        // Division by zero follows the bitvector convention.
        case BinaryOp::UDiv: return y == 0 ? om : x / y;
        case BinaryOp::URem: return y == 0 ? x : x % y;
        case BinaryOp::SDiv:
          if (y == 0) return sx_ < 0 ? 1 : om;
          return static_cast<uint64_t>(sx_ / sy) & om;
        case BinaryOp::SRem:
          if (y == 0) return x;
          return static_cast<uint64_t>(sx_ % sy) & om;
        case BinaryOp::And: return x & y;
        case BinaryOp::Or: return x | y;
        case BinaryOp::Xor: return x ^ y;
        case BinaryOp::Shl: return y >= ow ? 0 : (x << y) & om;
        case BinaryOp::LShr: return y >= ow ? 0 : x >> y;
        case BinaryOp::AShr:
          if (y >= ow) return sx_ < 0 ? om : 0;
          return static_cast<uint64_t>(static_cast<int64_t>(sx_) >> y) & om;
        case BinaryOp::Ult: return x < y;
        case BinaryOp::Ule: return x <= y;
        case BinaryOp::Ugt: return x > y;
        case BinaryOp::Uge: return x >= y;
        case BinaryOp::Slt: return sx_ < sy;
        case BinaryOp::Sle: return sx_ <= sy;
        case BinaryOp::Sgt: return sx_ > sy;
        case BinaryOp::Sge: return sx_ >= sy;
        case BinaryOp::Eq: return x == y;
        case BinaryOp::Ne: return x != y;
      }
      break;
    }
  }
  throw std::logic_error("oracle: unknown expression");
}

namespace {

bool holds(const PathConstraint& c, const Assignment& env) {
  if (c.kind == PathConstraint::Kind::Opaque) return (evalExpr(*c.cond, env) != 0) == c.truth;
  const uint64_t v = evalExpr(*c.var, env);
  return v >= c.interval->lower().bits() && v <= c.interval->upper().bits();
}

}  // namespace

std::vector<PathConstraint> unique(const std::vector<PathConstraint>& constraints) {
  std::vector<PathConstraint> out;
  for (const auto& c : constraints) {
    bool dup = false;
    for (const auto& d : out) {
      if (c.kind != d.kind) continue;
      if (c.kind == PathConstraint::Kind::Opaque) dup = c.truth == d.truth && *c.cond == *d.cond;
      else dup = *c.interval == *d.interval && *c.var == *d.var;
      if (dup) break;
    }
    if (!dup) out.push_back(c);
  }
  return out;
}

std::optional<Assignment> findModel(const std::vector<PathConstraint>& input, unsigned max_bits) {
  const auto constraints = unique(input);
  std::map<uint32_t, unsigned> widths;
  for (const auto& c : constraints)
    for (const auto& s : ir::collectSymbols(c.kind == PathConstraint::Kind::Opaque ? *c.cond : *c.var))
      widths[s.id] = s.width;
  unsigned total = 0;
  for (const auto& [id, w] : widths) total += w;
  if (total > max_bits) throw std::length_error("oracle: too many bits");
  std::vector<std::pair<uint32_t, unsigned>> syms(widths.begin(), widths.end());
  Assignment env;
  for (const auto& [id, w] : syms) env[id] = 0;
  const uint64_t count = 1ull << total;
  for (uint64_t n = 0; n < count; ++n) {
    uint64_t rest = n;
    for (const auto& [id, w] : syms) {
      env[id] = rest & maskOf(w);
      rest >>= w;
    }
    bool ok = true;
    for (const auto& c : constraints)
      if (!holds(c, env)) {
        ok = false;
        break;
      }
    if (ok) return env;
  }
  return std::nullopt;
}

std::optional<bool> satisfiable(const std::vector<PathConstraint>& constraints, unsigned max_bits) {
  try {
    return findModel(constraints, max_bits).has_value();
  } catch (const std::length_error&) {
    return std::nullopt;
  }
}

}  // namespace oracle
