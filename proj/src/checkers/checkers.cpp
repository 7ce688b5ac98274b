#include "refutelint/checkers/checkers.h"

namespace refutelint::checkers {

const char* checkerName(CheckerId id) {
  switch (id) {
    case CheckerId::NullDereference: return "core.NullDereference";
    case CheckerId::DivideZero: return "core.DivideZero";
  }
  return "?";
}

std::optional<CheckerId> checkerFromName(std::string_view name) {
  if (name == "core.NullDereference") return CheckerId::NullDereference;
  if (name == "core.DivideZero") return CheckerId::DivideZero;
  return std::nullopt;
}

namespace {

ir::ExprRef isZero(const ir::ExprRef& e) {
  return ir::mkBinary(ir::BinaryOp::Eq, e, ir::mkConst(e->width(), 0));
}

}  // namespace

std::optional<BugEvent> checkNullDeref(const ir::ProgramState& state, const ir::ExprRef& ptr,
                                       SourceLoc loc, uint32_t length,
                                       const std::optional<std::string>& variable) {
  if (!state.rangeOf(ptr).contains(0)) return std::nullopt;
  BugEvent ev;
  ev.checker = CheckerId::NullDereference;
  ev.message = "Dereference of null pointer";
  if (variable) ev.message += " (loaded from variable '" + *variable + "')";
  ev.loc = loc;
  ev.length = length;
  ev.condition = isZero(ptr);
  return ev;
}

std::optional<BugEvent> checkDivZero(const ir::ProgramState& state, const ir::ExprRef& divisor,
                                     SourceLoc loc, uint32_t length) {
  if (!state.rangeOf(divisor).contains(0)) return std::nullopt;
  BugEvent ev;
  ev.checker = CheckerId::DivideZero;
  ev.message = "Division by zero";
  ev.loc = loc;
  ev.length = length;
  ev.condition = isZero(divisor);
  return ev;
}

}  // namespace refutelint::checkers
