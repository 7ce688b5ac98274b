#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "refutelint/ir/expr.h"
#include "refutelint/ir/interval.h"

namespace refutelint::smt {

using ir::ExprRef;

class UnsupportedExpression : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One conjunct of a formula.
struct Assertion {
  enum class Kind {
    Equal,      // var = lower
    Range,      // lower <=u var <=u upper
    Condition,  // cond holds (truth) or fails (!truth)
  };

  Kind kind = Kind::Condition;
  ExprRef var;  // Equal, Range
  ir::BitVecValue lower{1, 0}, upper{1, 0};
  ExprRef cond;  // Condition (width 1)
  bool truth = true;

  static Assertion equal(ExprRef var, ir::BitVecValue value);
  static Assertion range(ExprRef var, ir::BitVecValue lower, ir::BitVecValue upper);
  static Assertion condition(ExprRef cond, bool truth);

  friend bool operator==(const Assertion& a, const Assertion& b);
};

/// Ordered conjunction of assertions plus the symbols they mention.
class SmtFormula {
 public:
  /// Appends `a` unless an identical assertion is already present. Returns
  /// whether it was added.
  bool add(Assertion a);

  /// True if some Equal/Range assertion constrains `var`.
  bool constrains(const ExprRef& var) const { return constrained_.count(var) != 0; }

  const std::vector<ir::Symbol>& declarations() const { return declarations_; }  // id order
  const std::vector<Assertion>& assertions() const { return assertions_; }
  bool empty() const { return assertions_.empty(); }

 private:
  void declare(const ir::Expr& e);

  std::vector<ir::Symbol> declarations_;
  std::vector<Assertion> assertions_;
  std::set<ExprRef, ir::ExprRefLess> constrained_;
};

/// SMT-LIB2 bitvector term for `e`. Width-1 comparison results are bridged
/// to bitvectors with `ite`.
std::string encodeExpr(const ir::Expr& e);
/// Boolean term: comparisons map to predicates, other values to `e != 0`.
std::string encodeBool(const ir::Expr& e);
std::string encodeAssertion(const Assertion& a);
std::string literal(const ir::BitVecValue& v);

/// `(set-logic QF_BV)`, declarations, assertions, `(check-sat)`.
std::string emitSmtLib(const SmtFormula& f);

}  // namespace refutelint::smt
