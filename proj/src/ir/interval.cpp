#include "refutelint/ir/interval.h"

#include <algorithm>
#include <stdexcept>

namespace refutelint::ir {

Interval::Interval(BitVecValue lower, BitVecValue upper) : lower_(lower), upper_(upper) {
  if (lower.width() != upper.width())
    throw std::invalid_argument("interval bounds have different widths");
  if (lower.bits() > upper.bits())
    throw std::invalid_argument("empty interval [" + lower.str() + ", " + upper.str() + "]");
}

std::optional<Interval> Interval::intersect(const Interval& other) const {
  if (other.width() != width()) throw std::invalid_argument("interval widths differ");
  const uint64_t lo = std::max(lower_.bits(), other.lower_.bits());
  const uint64_t hi = std::min(upper_.bits(), other.upper_.bits());
  if (lo > hi) return std::nullopt;
  return Interval(BitVecValue(width(), lo), BitVecValue(width(), hi));
}

std::string Interval::str() const {
  return "[" + std::to_string(lower_.bits()) + ", " + std::to_string(upper_.bits()) + "]";
}

std::optional<Interval> ConstraintMap::get(const ExprRef& e) const {
  auto it = entries_.find(e);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ConstraintMap::set(ExprRef e, Interval interval) {
  if (e->width() != interval.width())
    throw std::invalid_argument("interval width does not match " + toString(*e));
  entries_.insert_or_assign(std::move(e), interval);
}

std::string ConstraintMap::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [e, iv] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += toString(*e) + " -> " + iv.str();
  }
  return out + "}";
}

}  // namespace refutelint::ir
