#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refutelint/ir/expr.h"
#include "refutelint/ir/interval.h"

namespace refutelint::ir {

/// A path condition the interval solver could not represent exactly.
struct OpaqueCondition {
  ExprRef cond;  // width 1
  bool truth;

  friend bool operator==(const OpaqueCondition& a, const OpaqueCondition& b) {
    return a.truth == b.truth && *a.cond == *b.cond;
  }
};

struct ProgramPoint {
  std::string function;
  std::size_t block = 0;
  std::size_t index = 0;  // statement index; == size means the terminator

  friend bool operator==(const ProgramPoint&, const ProgramPoint&) = default;
};

/// Activation of one function on the symbolic call stack.
struct Frame {
  std::string function;
  uint32_t serial = 0;                   // unique per path, used for local addresses
  std::map<std::string, ExprRef> env;    // variable (unique name) -> value
  std::size_t block = 0;
  std::size_t index = 0;
  std::optional<std::string> result_var;  // caller variable receiving the return value
};

/// Node payload of the exploded graph: the value environment and the
/// constraints required to reach the node.
struct ProgramState {
  std::vector<Frame> frames;
  ConstraintMap constraints;
  std::vector<OpaqueCondition> opaque;
  // Values stored through pointers that do not name a known local.
  std::map<ExprRef, ExprRef, ExprRefLess> heap;
  // (frame serial, loop header block) -> back edges taken on this path
  std::map<std::pair<uint32_t, std::size_t>, unsigned> back_edges;
  uint32_t next_frame_serial = 0;

  bool hasFrame() const { return !frames.empty(); }
  Frame& top() { return frames.back(); }
  const Frame& top() const { return frames.back(); }
  const std::map<std::string, ExprRef>& env() const { return frames.back().env; }

  ProgramPoint point() const {
    if (frames.empty()) return {};
    return {top().function, top().block, top().index};
  }

  /// Value of a variable in the innermost frame, if bound.
  std::optional<ExprRef> lookup(const std::string& var) const {
    if (frames.empty()) return std::nullopt;
    auto it = top().env.find(var);
    if (it == top().env.end()) return std::nullopt;
    return it->second;
  }
  void bind(const std::string& var, ExprRef value) { top().env.insert_or_assign(var, std::move(value)); }

  /// Interval currently known for `e`: constants are points, unconstrained
  /// expressions get the full range.
  Interval rangeOf(const ExprRef& e) const {
    if (e->isConst()) return Interval::point(e->constant());
    if (auto iv = constraints.get(e)) return *iv;
    return Interval::full(e->width());
  }
};

}  // namespace refutelint::ir
