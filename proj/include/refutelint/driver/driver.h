#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "refutelint/reports/report.h"
#include "refutelint/smt/solver.h"
#include "refutelint/symexec/engine.h"

namespace refutelint::driver {

struct RunConfig {
  std::vector<std::string> inputs;
  bool crosscheck_with_smt = true;
  smt::SolverBackend solver = smt::SolverBackend::builtin();
  reports::Format format = reports::Format::Text;
  bool show_refuted = false;
  bool stats = false;
  unsigned jobs = 1;
  symexec::ExplorationBudget budget;

  /// Throws std::invalid_argument on a non-positive timeout or budget.
  void validate() const;
};

/// Wall-clock time of one solver query.
struct QueryRecord {
  SourceLoc loc;
  std::string verdict;
  double seconds = 0;
};

struct FileResult {
  std::string file;
  std::string source;
  std::string error;  // nonempty: the file could not be analyzed
  std::vector<reports::BugReport> reports;  // one per (checker, location), sorted by location
  std::size_t reported = 0;                 // before refutation
  std::size_t refuted = 0;
  double analysis_seconds = 0;    // parse, lower, explore, dedup
  double refutation_seconds = 0;  // solver work
  std::vector<QueryRecord> queries;
  bool solver_unavailable = false;
  std::string graph_dump;  // filled when requested
};

/// Full pipeline on one file. Never throws for bad input; see `error`.
FileResult analyzeFile(const std::string& path, const RunConfig& config, bool dump_graph = false);
/// Same pipeline on in-memory source text.
FileResult analyzeSource(const std::string& name, const std::string& source, const RunConfig& config,
                         bool dump_graph = false);

/// Analyzes every input (in parallel up to `jobs`), writes rendered reports
/// to `out` and diagnostics and statistics to `err`. Returns the exit code:
/// 0 no confirmed reports, 1 confirmed reports, 2 error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct CorpusRow {
  std::string file;
  double time_no_ref = 0;
  double time_with_ref = 0;
  std::size_t reported = 0;
  std::size_t refuted = 0;
  std::string error;
};

struct CorpusTable {
  std::vector<CorpusRow> rows;
  CorpusRow totals;
  double max_query_seconds = 0;
};

/// Runs every `.c` file of `dir` (sorted by name) with and without
/// refutation. Per-file failures are recorded in the row.
CorpusTable runCorpus(const std::string& dir, const RunConfig& config);

std::string renderTable(const CorpusTable& table);
std::string renderTableJson(const CorpusTable& table);

}  // namespace refutelint::driver
