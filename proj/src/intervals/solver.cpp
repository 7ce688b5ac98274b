#include "refutelint/intervals/solver.h"

#include <algorithm>

namespace refutelint::intervals {

using ir::Expr;
using ir::ExprKind;

const char* reasonName(SupportVerdict::Reason reason) {
  switch (reason) {
    case SupportVerdict::Reason::None: return "none";
    case SupportVerdict::Reason::UnsupportedOperator: return "unsupported-operator";
    case SupportVerdict::Reason::TooComplex: return "too-complex";
  }
  return "?";
}

namespace {

bool rejectedOperator(const Expr& e) {
  if (e.kind() == ExprKind::Unary) return e.unary().op == ir::UnaryOp::BitNot;
  if (e.kind() != ExprKind::Binary) return false;
  switch (e.binary().op) {
    case BinaryOp::URem:
    case BinaryOp::SRem:
    case BinaryOp::And:
    case BinaryOp::Or:
    case BinaryOp::Xor:
    case BinaryOp::Shl:
    case BinaryOp::LShr:
    case BinaryOp::AShr:
      return true;
    default:
      return false;
  }
}

// Returns false as soon as a rejected operator is seen.
bool scan(const Expr& e, std::size_t& operators) {
  if (rejectedOperator(e)) return false;
  switch (e.kind()) {
    case ExprKind::Const:
    case ExprKind::Sym:
      return true;
    case ExprKind::Cast:
      return scan(*e.cast().operand, operators);
    case ExprKind::Unary:
      ++operators;
      return scan(*e.unary().operand, operators);
    case ExprKind::Binary:
      ++operators;
      return scan(*e.binary().lhs, operators) && scan(*e.binary().rhs, operators);
  }
  return true;
}

}  // namespace

SupportVerdict isSupported(const Expr& e) {
  std::size_t operators = 0;
  bool ok;
  if (e.isComparison()) {
    ok = !rejectedOperator(e) && scan(*e.binary().lhs, operators) && scan(*e.binary().rhs, operators);
  } else {
    ok = scan(e, operators);
  }
  if (!ok) return {false, SupportVerdict::Reason::UnsupportedOperator};
  if (operators > 1) return {false, SupportVerdict::Reason::TooComplex};
  return {};
}

ComparisonRange intervalForComparison(BinaryOp op, const BitVecValue& k, bool truth) {
  if (!truth) op = ir::negateComparison(op);
  const unsigned w = k.width();
  const uint64_t max = ir::widthMask(w);
  const uint64_t kb = k.bits();
  auto seg = [w](uint64_t lo, uint64_t hi) { return Interval(BitVecValue(w, lo), BitVecValue(w, hi)); };
  auto range = [&](uint64_t lo, uint64_t hi) {
    return ComparisonRange{seg(lo, hi), true, {seg(lo, hi)}};
  };
  auto split = [&](uint64_t hi0, uint64_t lo1) {
    return ComparisonRange{Interval::full(w), false, {seg(0, hi0), seg(lo1, max)}};
  };
  const ComparisonRange empty{std::nullopt, true, {}};

  if (ir::isSignedComparison(op)) {
    const int64_t smin = ir::toSigned(w, ir::signBit(w));
    const int64_t smax = ir::toSigned(w, ir::signBit(w) - 1);
    const int64_t ks = k.asSigned();
    int64_t lo = smin, hi = smax;
    switch (op) {
      case BinaryOp::Slt:
        if (ks == smin) return empty;
        hi = ks - 1;
        break;
      case BinaryOp::Sle: hi = ks; break;
      case BinaryOp::Sgt:
        if (ks == smax) return empty;
        lo = ks + 1;
        break;
      case BinaryOp::Sge: lo = ks; break;
      default: break;
    }
    const uint64_t ulo = static_cast<uint64_t>(lo) & max;
    const uint64_t uhi = static_cast<uint64_t>(hi) & max;
    if ((lo >= 0) == (hi >= 0)) return range(ulo, uhi);
    // Straddles zero: [0, hi] plus [lo + 2^w, max] in the unsigned order.
    return split(uhi, ulo);
  }

  switch (op) {
    case BinaryOp::Ult:
      if (kb == 0) return empty;
      return range(0, kb - 1);
    case BinaryOp::Ule: return range(0, kb);
    case BinaryOp::Ugt:
      if (kb == max) return empty;
      return range(kb + 1, max);
    case BinaryOp::Uge: return range(kb, max);
    case BinaryOp::Eq: return range(kb, kb);
    case BinaryOp::Ne:
      if (kb == 0) return range(1, max);
      if (kb == max) return range(0, max - 1);
      return split(kb - 1, kb + 1);
    default:
      throw std::invalid_argument("intervalForComparison: not a comparison");
  }
}

namespace {

void addOpaque(ProgramState& state, ExprRef cond, bool truth) {
  ir::OpaqueCondition oc{std::move(cond), truth};
  if (std::find(state.opaque.begin(), state.opaque.end(), oc) == state.opaque.end())
    state.opaque.push_back(std::move(oc));
}

void recordUnconstrained(ProgramState& state, const ExprRef& e) {
  if (!state.constraints.contains(e)) state.constraints.set(e, Interval::full(e->width()));
}

}  // namespace

std::optional<ProgramState> assume(ProgramState state, const ExprRef& cond, bool truth) {
  if (cond->width() != 1) throw std::invalid_argument("assume: condition must have width 1");
  if (cond->isConst()) {
    if ((cond->constant().bits() != 0) != truth) return std::nullopt;
    return state;
  }

  ExprRef c = cond;
  if (!c->isComparison()) c = ir::mkBinary(BinaryOp::Ne, c, ir::mkConst(c->width(), 0));
  // mkBinary keeps constants on the right, so a constant lhs means both are.
  if (c->isConst()) {
    if ((c->constant().bits() != 0) != truth) return std::nullopt;
    return state;
  }
  const auto& bin = c->binary();
  if (!bin.rhs->isConst()) {
    addOpaque(state, c, truth);
    return state;
  }

  const ExprRef& operand = bin.lhs;
  if (!isSupported(*c).supported) {
    recordUnconstrained(state, operand);
    addOpaque(state, c, truth);
    return state;
  }

  const ComparisonRange r = intervalForComparison(bin.op, bin.rhs->constant(), truth);
  const Interval current = state.rangeOf(operand);
  std::vector<Interval> parts;
  for (const Interval& s : r.segments)
    if (auto p = current.intersect(s)) parts.push_back(*p);
  if (parts.empty()) return std::nullopt;
  const Interval narrowed(parts.front().lower(), parts.back().upper());
  state.constraints.set(operand, narrowed);
  // The hull of two surviving pieces admits values the condition excludes.
  if (parts.size() > 1) addOpaque(state, c, truth);
  return state;
}

}  // namespace refutelint::intervals
