#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "refutelint/checkers/checkers.h"
#include "refutelint/frontend/cfg.h"
#include "refutelint/ir/state.h"

namespace refutelint::symexec {

enum class OpKind { Entry, Bind, Assign, Assume, Call, Return, Deref, Epsilon };

const char* opKindName(OpKind kind);

/// Label of the edge leading into a node.
struct EdgeOp {
  OpKind kind = OpKind::Entry;
  std::string label;
  SourceLoc loc;
  ir::ExprRef cond;  // Assume only
  bool truth = true;
};

struct ExplodedNode;
using NodeRef = std::shared_ptr<const ExplodedNode>;

struct ExplodedNode {
  uint32_t id = 0;
  ir::ProgramState state;
  EdgeOp op;
  NodeRef parent;
  std::optional<checkers::BugEvent> event;  // set on epsilon nodes

  bool isEpsilon() const { return event.has_value(); }
};

struct ExplorationBudget {
  unsigned max_loop_unrollings = 4;
  unsigned max_call_depth = 5;
  std::size_t max_nodes = 100000;

  /// Throws std::invalid_argument unless every bound is positive.
  void validate() const;
};

/// The explored state tree. Paths are never merged.
struct ExplodedGraph {
  NodeRef root;
  std::vector<NodeRef> nodes;     // creation order; nodes[i]->id == i
  std::vector<NodeRef> epsilons;  // creation order
  std::vector<std::string> annotations;
  bool budget_exhausted = false;
  uint32_t symbol_count = 0;

  /// One line per node: id, parent, op label, constraints, opaque conditions.
  std::string dump() const;
};

class SymbolicExecutor {
 public:
  SymbolicExecutor(const frontend::Program& program, ExplorationBudget budget = {});

  /// Explores `entry` depth-first, true branches before false branches.
  /// Throws std::invalid_argument if `entry` is not defined.
  ExplodedGraph execute(const std::string& entry);

 private:
  struct Impl;
  const frontend::Program& program_;
  ExplorationBudget budget_;
};

/// Root-to-epsilon node sequence. Throws std::invalid_argument for a node
/// that is not an epsilon node.
std::vector<NodeRef> extractPath(const NodeRef& eps);

/// Width-1 truth value of a C scalar: comparisons pass through, anything
/// else becomes `v != 0`.
ir::ExprRef toCondition(const ir::ExprRef& v);

/// Address given to local `slot` of the frame with `serial`.
uint64_t localAddress(uint32_t serial, std::size_t slot);

}  // namespace refutelint::symexec
