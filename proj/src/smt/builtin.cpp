#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "refutelint/smt/solver.h"

namespace refutelint::smt {

using ir::BinaryOp;
using ir::Expr;
using ir::ExprKind;
using ir::widthMask;

namespace {

uint64_t lowMask(uint64_t m) {
  if (m == 0) return 0;
  const int top = 63 - std::countl_zero(m);
  return top == 63 ? ~uint64_t{0} : (uint64_t{1} << (top + 1)) - 1;
}

// Adds to `out` the bits of each symbol that bits `m` of `e` depend on.
void demand(const Expr& e, uint64_t m, std::map<uint32_t, uint64_t>& out) {
  const unsigned w = e.width();
  m &= widthMask(w);
  if (m == 0) return;
  switch (e.kind()) {
    case ExprKind::Const: return;
    case ExprKind::Sym: out[e.symbol().id] |= m; return;
    case ExprKind::Cast: {
      const Expr& x = *e.cast().operand;
      const unsigned n = x.width();
      if (w <= n) return demand(x, m, out);
      uint64_t inner = m & widthMask(n);
      if (e.cast().sign_extend && (m & ~widthMask(n))) inner |= ir::signBit(n);
      return demand(x, inner, out);
    }
    case ExprKind::Unary: {
      const Expr& x = *e.unary().operand;
      switch (e.unary().op) {
        case ir::UnaryOp::BitNot: return demand(x, m, out);
        case ir::UnaryOp::Neg: return demand(x, lowMask(m), out);
        case ir::UnaryOp::LogNot: return demand(x, widthMask(x.width()), out);
      }
      return;
    }
    case ExprKind::Binary: {
      const auto& b = e.binary();
      const Expr& l = *b.lhs;
      const Expr& r = *b.rhs;
      const uint64_t all = widthMask(l.width());
      switch (b.op) {
        case BinaryOp::And:
          demand(l, r.isConst() ? m & r.constant().bits() : m, out);
          demand(r, l.isConst() ? m & l.constant().bits() : m, out);
          return;
        case BinaryOp::Or:
          demand(l, r.isConst() ? m & ~r.constant().bits() : m, out);
          demand(r, l.isConst() ? m & ~l.constant().bits() : m, out);
          return;
        case BinaryOp::Xor:
          demand(l, m, out);
          demand(r, m, out);
          return;
        case BinaryOp::Add:
        case BinaryOp::Sub:
        case BinaryOp::Mul:
          demand(l, lowMask(m), out);
          demand(r, lowMask(m), out);
          return;
        case BinaryOp::Shl:
        case BinaryOp::LShr:
        case BinaryOp::AShr: {
          if (!r.isConst()) break;
          const uint64_t k = r.constant().bits();
          if (b.op == BinaryOp::Shl) {
            if (k < w) demand(l, m >> k, out);
          } else if (b.op == BinaryOp::LShr) {
            if (k < w) demand(l, (m << k) & all, out);
          } else {
            const uint64_t sign = ir::signBit(w);
            if (k >= w) {
              demand(l, sign, out);
            } else {
              const uint64_t fill = all & ~(all >> k);
              demand(l, ((m << k) & all) | ((m & fill) ? sign : 0), out);
            }
          }
          return;
        }
        default:
          break;
      }
      demand(l, all, out);
      demand(r, all, out);
      return;
    }
  }
}

// Flat evaluation program for one assertion.
struct Instr {
  enum class Op : uint8_t { Const, Sym, Cast, Unary, Binary } op;
  uint8_t code = 0;
  bool sign_extend = false;
  unsigned width = 0, from = 0;
  uint32_t a = 0, b = 0;
  uint64_t value = 0;
};

struct Program {
  std::vector<Instr> code;
  Assertion::Kind kind;
  uint64_t lower = 0, upper = 0;
  bool truth = true;
  std::size_t level = 0;  // deepest declaration index used

  uint64_t eval(const std::vector<uint64_t>& syms, std::vector<uint64_t>& regs) const {
    regs.resize(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) {
      const Instr& in = code[i];
      switch (in.op) {
        case Instr::Op::Const: regs[i] = in.value; break;
        case Instr::Op::Sym: regs[i] = syms[in.a]; break;
        case Instr::Op::Cast: regs[i] = ir::applyCast(in.from, in.width, in.sign_extend, regs[in.a]); break;
        case Instr::Op::Unary:
          regs[i] = ir::applyUnary(static_cast<ir::UnaryOp>(in.code), in.from, regs[in.a]);
          break;
        case Instr::Op::Binary:
          regs[i] = ir::applyBinary(static_cast<BinaryOp>(in.code), in.from, regs[in.a], regs[in.b]);
          break;
      }
    }
    return regs.back();
  }

  bool holds(const std::vector<uint64_t>& syms, std::vector<uint64_t>& regs) const {
    const uint64_t v = eval(syms, regs);
    switch (kind) {
      case Assertion::Kind::Equal: return v == lower;
      case Assertion::Kind::Range: return v >= lower && v <= upper;
      case Assertion::Kind::Condition: return (v != 0) == truth;
    }
    return false;
  }
};

class Compiler {
 public:
  explicit Compiler(const std::unordered_map<uint32_t, std::size_t>& slots) : slots_(slots) {}

  Program compile(const Assertion& a) {
    Program p;
    p.kind = a.kind;
    p.truth = a.truth;
    p.lower = a.lower.bits();
    p.upper = a.upper.bits();
    prog_ = &p;
    memo_.clear();
    emit(a.kind == Assertion::Kind::Condition ? *a.cond : *a.var);
    return p;
  }

 private:
  uint32_t emit(const Expr& e) {
    if (auto it = memo_.find(&e); it != memo_.end()) return it->second;
    Instr in{};
    in.width = e.width();
    switch (e.kind()) {
      case ExprKind::Const:
        in.op = Instr::Op::Const;
        in.value = e.constant().bits();
        break;
      case ExprKind::Sym: {
        in.op = Instr::Op::Sym;
        const std::size_t slot = slots_.at(e.symbol().id);
        in.a = static_cast<uint32_t>(slot);
        prog_->level = std::max(prog_->level, slot);
        break;
      }
      case ExprKind::Cast:
        in.op = Instr::Op::Cast;
        in.sign_extend = e.cast().sign_extend;
        in.from = e.cast().operand->width();
        in.a = emit(*e.cast().operand);
        break;
      case ExprKind::Unary:
        in.op = Instr::Op::Unary;
        in.code = static_cast<uint8_t>(e.unary().op);
        in.from = e.unary().operand->width();
        in.a = emit(*e.unary().operand);
        break;
      case ExprKind::Binary:
        in.op = Instr::Op::Binary;
        in.code = static_cast<uint8_t>(e.binary().op);
        in.from = e.binary().lhs->width();
        in.a = emit(*e.binary().lhs);
        in.b = emit(*e.binary().rhs);
        break;
    }
    prog_->code.push_back(in);
    const auto idx = static_cast<uint32_t>(prog_->code.size() - 1);
    memo_.emplace(&e, idx);
    return idx;
  }

  const std::unordered_map<uint32_t, std::size_t>& slots_;
  Program* prog_ = nullptr;
  std::unordered_map<const Expr*, uint32_t> memo_;
};

class Enumerator {
 public:
  Enumerator(std::vector<uint64_t> masks, std::vector<std::vector<Program>> buckets,
             std::optional<std::chrono::steady_clock::time_point> deadline)
      : masks_(std::move(masks)), buckets_(std::move(buckets)), deadline_(deadline),
        values_(masks_.size(), 0) {}

  SolverVerdict run() {
    if (!check(0)) return SolverVerdict::unsat();
    if (masks_.empty()) return SolverVerdict::sat();
    const bool found = search(0);
    if (timed_out_) return SolverVerdict::unknown(SolverVerdict::Reason::Timeout, "builtin deadline");
    return found ? SolverVerdict::sat() : SolverVerdict::unsat();
  }

 private:
  // Assertions whose deepest symbol is declaration `level - 1` (0: closed).
  bool check(std::size_t bucket) {
    for (const auto& p : buckets_[bucket])
      if (!p.holds(values_, regs_)) return false;
    return true;
  }

  bool search(std::size_t level) {
    const uint64_t m = masks_[level];
    uint64_t v = 0;
    do {
      values_[level] = v;
      if ((++steps_ & 0xffff) == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_) {
        timed_out_ = true;
        return false;
      }
      if (check(level + 1)) {
        if (level + 1 == masks_.size() || search(level + 1)) return true;
        if (timed_out_) return false;
      }
      v = (v - m) & m;  // next submask of m
    } while (v != 0);
    return false;
  }

  std::vector<uint64_t> masks_;
  std::vector<std::vector<Program>> buckets_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<uint64_t> values_;
  std::vector<uint64_t> regs_;
  uint64_t steps_ = 0;
  bool timed_out_ = false;
};

}  // namespace

std::vector<uint64_t> demandedBits(const SmtFormula& f) {
  std::map<uint32_t, uint64_t> bits;
  for (const auto& a : f.assertions()) {
    if (a.kind == Assertion::Kind::Condition) demand(*a.cond, 1, bits);
    else demand(*a.var, widthMask(a.var->width()), bits);
  }
  std::vector<uint64_t> out;
  for (const auto& s : f.declarations()) out.push_back(bits.count(s.id) ? bits[s.id] : 0);
  return out;
}

SolverVerdict checkSatBuiltin(const SmtFormula& f, const BuiltinOptions& options) {
  const auto& decls = f.declarations();
  std::vector<uint64_t> masks;
  if (options.demanded_bits_only) {
    masks = demandedBits(f);
  } else {
    for (const auto& s : decls) masks.push_back(widthMask(s.width));
  }
  unsigned total = 0;
  for (uint64_t m : masks) total += std::popcount(m);
  if (total > options.max_bits)
    return SolverVerdict::unknown(SolverVerdict::Reason::OverBudget,
                                  std::to_string(total) + " bits > " + std::to_string(options.max_bits));

  std::unordered_map<uint32_t, std::size_t> slots;
  for (std::size_t i = 0; i < decls.size(); ++i) slots[decls[i].id] = i;
  Compiler compiler(slots);
  std::vector<std::vector<Program>> buckets(decls.size() + 1);
  for (const auto& a : f.assertions()) {
    Program p = compiler.compile(a);
    const bool closed = std::none_of(p.code.begin(), p.code.end(),
                                     [](const Instr& in) { return in.op == Instr::Op::Sym; });
    buckets[closed ? 0 : p.level + 1].push_back(std::move(p));
  }
  return Enumerator(std::move(masks), std::move(buckets), options.deadline).run();
}

SolverVerdict checkSatBuiltin(const SmtFormula& f, unsigned max_bits) {
  BuiltinOptions o;
  o.max_bits = max_bits;
  return checkSatBuiltin(f, o);
}

}  // namespace refutelint::smt
