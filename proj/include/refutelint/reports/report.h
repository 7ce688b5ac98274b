#pragma once

#include <map>
#include <string>
#include <vector>

#include "refutelint/checkers/checkers.h"
#include "refutelint/symexec/engine.h"

namespace refutelint::reports {

enum class ReportStatus { Candidate, Confirmed, Refuted };

const char* statusName(ReportStatus status);

class BugReport {
 public:
  checkers::CheckerId checker = checkers::CheckerId::NullDereference;
  std::string file;
  SourceLoc loc;
  uint32_t length = 1;
  std::string message;
  std::vector<symexec::NodeRef> path;  // root first, epsilon node last

  ReportStatus status() const { return status_; }
  /// Both throw std::logic_error unless the report is still a candidate.
  void confirm();
  void refute();

  std::size_t pathLength() const { return path.size(); }

 private:
  ReportStatus status_ = ReportStatus::Candidate;
};

/// One candidate report per epsilon node, in exploration order.
std::vector<BugReport> makeReports(const symexec::ExplodedGraph& graph, const std::string& file);

/// Reports sharing a (checker, location) key, shortest path first; ties
/// keep exploration order. Groups appear in order of first occurrence.
std::vector<std::vector<BugReport>> group(std::vector<BugReport> reports);

/// One report per key: the first member of each group.
std::vector<BugReport> dedup(std::vector<BugReport> reports);

enum class Format { Text, Json };

/// Source text per file name, used for the quoted line under each warning.
using SourceMap = std::map<std::string, std::string>;

/// Text: a clang-style block per shown report and a `N warnings generated.`
/// line counting confirmed and candidate reports. Refuted reports are shown
/// only with `show_refuted`. JSON lists every report with its status.
std::string render(const std::vector<BugReport>& reports, Format format, const SourceMap& sources,
                   bool show_refuted = false);

}  // namespace refutelint::reports
