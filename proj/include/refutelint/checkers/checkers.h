#pragma once

#include <optional>
#include <string>

#include "refutelint/ir/state.h"

namespace refutelint::checkers {

enum class CheckerId { NullDereference, DivideZero };

/// Stable name used in reports and deduplication keys.
const char* checkerName(CheckerId id);
std::optional<CheckerId> checkerFromName(std::string_view name);

/// A candidate property violation found during exploration.
struct BugEvent {
  CheckerId checker = CheckerId::NullDereference;
  std::string message;
  SourceLoc loc;
  uint32_t length = 1;
  ir::ExprRef condition;  // the bad-value condition, width 1 (e.g. ptr == 0)
};

/// Fires when `ptr` may be null under the state's intervals. `variable` is
/// the source name when the pointer was loaded from a plain variable.
std::optional<BugEvent> checkNullDeref(const ir::ProgramState& state, const ir::ExprRef& ptr,
                                       SourceLoc loc, uint32_t length,
                                       const std::optional<std::string>& variable = std::nullopt);

/// Fires when `divisor` may be zero under the state's intervals.
std::optional<BugEvent> checkDivZero(const ir::ProgramState& state, const ir::ExprRef& divisor,
                                     SourceLoc loc, uint32_t length);

}  // namespace refutelint::checkers
