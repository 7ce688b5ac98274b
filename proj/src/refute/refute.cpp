#include "refutelint/refute/refute.h"

#include <chrono>

namespace refutelint::refute {

PathConstraint PathConstraint::range(ir::ExprRef var, ir::Interval interval) {
  PathConstraint c;
  c.kind = Kind::Range;
  c.var = std::move(var);
  c.interval = interval;
  return c;
}

PathConstraint PathConstraint::opaque(ir::ExprRef cond, bool truth) {
  PathConstraint c;
  c.kind = Kind::Opaque;
  c.cond = std::move(cond);
  c.truth = truth;
  return c;
}

std::vector<PathConstraint> collectConstraints(const std::vector<symexec::NodeRef>& path) {
  std::vector<PathConstraint> out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const ir::ProgramState& s = (*it)->state;
    for (const auto& [var, iv] : s.constraints) out.push_back(PathConstraint::range(var, iv));
    for (const auto& oc : s.opaque) out.push_back(PathConstraint::opaque(oc.cond, oc.truth));
  }
  return out;
}

std::vector<PathConstraint> collectConstraints(const reports::BugReport& report) {
  return collectConstraints(report.path);
}

void encodeConstraint(const std::vector<PathConstraint>& constraints, smt::SmtFormula& phi,
                      bool skip_duplicates) {
  for (const auto& c : constraints) {
    if (c.kind == PathConstraint::Kind::Opaque) {
      phi.add(smt::Assertion::condition(c.cond, c.truth));
      continue;
    }
    // Walking backwards, a later constraint on the same expression is
    // never tighter than the one already encoded.
    if (skip_duplicates && phi.constrains(c.var)) continue;
    const ir::Interval& iv = *c.interval;
    if (iv.isPoint()) phi.add(smt::Assertion::equal(c.var, iv.lower()));
    else phi.add(smt::Assertion::range(c.var, iv.lower(), iv.upper()));
  }
}

smt::SmtFormula encodeReport(const reports::BugReport& report) {
  smt::SmtFormula phi;
  encodeConstraint(collectConstraints(report), phi);
  return phi;
}

Refutation refuteReport(const reports::BugReport& report, const smt::SolverBackend& solver) {
  const auto start = std::chrono::steady_clock::now();
  Refutation r;
  try {
    const smt::SmtFormula phi = encodeReport(report);
    r.verdict = smt::checkSat(phi, solver);
  } catch (const smt::UnsupportedExpression& e) {
    r.verdict = smt::SolverVerdict::unknown(smt::SolverVerdict::Reason::SolverError, e.what());
  }
  r.status = r.verdict.isUnsat() ? reports::ReportStatus::Refuted : reports::ReportStatus::Confirmed;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace refutelint::refute
