#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "refutelint/ir/bitvec.h"
#include "refutelint/ir/expr.h"

namespace refutelint::ir {

/// Closed range [lower, upper] in the unsigned order of one bit width.
class Interval {
 public:
  /// Throws std::invalid_argument when widths differ or lower > upper.
  Interval(BitVecValue lower, BitVecValue upper);

  static Interval full(unsigned width) {
    return {BitVecValue::zero(width), BitVecValue::ones(width)};
  }
  static Interval point(BitVecValue value) { return {value, value}; }

  const BitVecValue& lower() const { return lower_; }
  const BitVecValue& upper() const { return upper_; }
  unsigned width() const { return lower_.width(); }

  bool isPoint() const { return lower_ == upper_; }
  bool isFull() const { return lower_.isZero() && upper_.bits() == widthMask(width()); }
  bool contains(uint64_t bits) const { return bits >= lower_.bits() && bits <= upper_.bits(); }
  bool containsInterval(const Interval& other) const {
    return other.lower_.bits() >= lower_.bits() && other.upper_.bits() <= upper_.bits();
  }

  /// Empty result means the two ranges are disjoint.
  std::optional<Interval> intersect(const Interval& other) const;

  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  BitVecValue lower_, upper_;
};

/// One interval per constrained expression, keyed structurally.
class ConstraintMap {
 public:
  using Storage = std::map<ExprRef, Interval, ExprRefLess>;

  std::optional<Interval> get(const ExprRef& e) const;
  /// Replaces any existing interval for `e`. Width must match.
  void set(ExprRef e, Interval interval);
  bool contains(const ExprRef& e) const { return entries_.count(e) != 0; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Storage::const_iterator begin() const { return entries_.begin(); }
  Storage::const_iterator end() const { return entries_.end(); }

  std::string str() const;

  friend bool operator==(const ConstraintMap& a, const ConstraintMap& b) {
    return a.entries_.size() == b.entries_.size() &&
           std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                      [](const auto& x, const auto& y) {
                        return *x.first == *y.first && x.second == y.second;
                      });
  }

 private:
  Storage entries_;
};

}  // namespace refutelint::ir
