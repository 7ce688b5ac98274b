#pragma once

#include <optional>
#include <vector>

#include "refutelint/ir/state.h"

namespace refutelint::intervals {

using ir::BinaryOp;
using ir::BitVecValue;
using ir::ExprRef;
using ir::Interval;
using ir::ProgramState;

struct SupportVerdict {
  enum class Reason { None, UnsupportedOperator, TooComplex };

  bool supported = true;
  Reason reason = Reason::None;

  friend bool operator==(const SupportVerdict&, const SupportVerdict&) = default;
};

const char* reasonName(SupportVerdict::Reason reason);

/// Whether the interval solver reasons about `e`. Remainders and bitwise
/// operators are rejected outright; otherwise at most one arithmetic
/// operator is allowed. A comparison at the root and casts are free.
SupportVerdict isSupported(const ir::Expr& e);

/// Values of the non-constant operand satisfying `operand op k` (or its
/// negation). `hull` is empty when no value qualifies; `exact` is false when
/// the true set is two segments and `hull` encloses both.
struct ComparisonRange {
  std::optional<Interval> hull;
  bool exact = true;
  std::vector<Interval> segments;  // the satisfying set, at most two pieces
};

ComparisonRange intervalForComparison(BinaryOp op, const BitVecValue& k, bool truth);

/// Adds `cond == truth` to the state. Returns nothing when the interval
/// solver can prove the result infeasible. Conditions it cannot represent
/// exactly are kept in `state.opaque` for the refutation pass.
std::optional<ProgramState> assume(ProgramState state, const ExprRef& cond, bool truth);

}  // namespace refutelint::intervals
