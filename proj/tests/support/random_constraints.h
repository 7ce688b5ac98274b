#pragma once

// Random symbolic expressions and constraint lists over a few 8-bit symbols.

#include <random>
#include <vector>

#include "refutelint/ir/expr.h"
#include "refutelint/refute/refute.h"

namespace oracle {

std::vector<refutelint::ir::Symbol> makeSymbols(unsigned count, unsigned width = 8);

/// Expression of `width` bits (8 or 32) over `symbols`.
refutelint::ir::ExprRef randomExpr(std::mt19937_64& rng, const std::vector<refutelint::ir::Symbol>& symbols,
                                   int depth, unsigned width = 8);

/// Width-1 comparison between random expressions.
refutelint::ir::ExprRef randomCondition(std::mt19937_64& rng,
                                        const std::vector<refutelint::ir::Symbol>& symbols, int depth);

/// Conjunction of 1..max_len interval and opaque constraints.
std::vector<refutelint::refute::PathConstraint> randomConjunction(
    std::mt19937_64& rng, const std::vector<refutelint::ir::Symbol>& symbols, int max_len);

/// Constraint list shaped like a backward walk over one path: intervals on
/// each expression only narrow going forward, every node repeats all
/// constraints known so far, and the list runs from the last node back.
std::vector<refutelint::refute::PathConstraint> randomBackwardWalk(
    std::mt19937_64& rng, const std::vector<refutelint::ir::Symbol>& symbols, int nodes);

}  // namespace oracle
