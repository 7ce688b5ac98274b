#pragma once

#include <optional>
#include <vector>

#include "refutelint/reports/report.h"
#include "refutelint/smt/solver.h"

namespace refutelint::refute {

/// One constraint gathered from a report path: an interval on an
/// expression, or a condition the interval solver could not represent.
struct PathConstraint {
  enum class Kind { Range, Opaque };

  Kind kind = Kind::Range;
  ir::ExprRef var;                      // Range
  std::optional<ir::Interval> interval;  // Range
  ir::ExprRef cond;                     // Opaque
  bool truth = true;                    // Opaque

  static PathConstraint range(ir::ExprRef var, ir::Interval interval);
  static PathConstraint opaque(ir::ExprRef cond, bool truth);
};

/// Constraints of every node on the path, last node first. Duplicates are
/// kept; the encoder drops them.
std::vector<PathConstraint> collectConstraints(const std::vector<symexec::NodeRef>& path);
std::vector<PathConstraint> collectConstraints(const reports::BugReport& report);

/// Encodes `constraints` into `phi` in order. An interval on an expression
/// that `phi` already constrains is skipped (unless `skip_duplicates` is
/// off); point intervals become equalities, other intervals a pair of
/// unsigned bounds. Opaque conditions are always asserted once.
void encodeConstraint(const std::vector<PathConstraint>& constraints, smt::SmtFormula& phi,
                      bool skip_duplicates = true);

smt::SmtFormula encodeReport(const reports::BugReport& report);

struct Refutation {
  reports::ReportStatus status = reports::ReportStatus::Confirmed;
  smt::SolverVerdict verdict;
  double seconds = 0;
};

/// Refuted iff the solver proves the path formula unsatisfiable. Throws
/// smt::SolverUnavailable when an external solver cannot be started.
Refutation refuteReport(const reports::BugReport& report, const smt::SolverBackend& solver);

}  // namespace refutelint::refute
