#include "refutelint/reports/report.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace refutelint::reports {

const char* statusName(ReportStatus status) {
  switch (status) {
    case ReportStatus::Candidate: return "candidate";
    case ReportStatus::Confirmed: return "confirmed";
    case ReportStatus::Refuted: return "refuted";
  }
  return "?";
}

void BugReport::confirm() {
  if (status_ != ReportStatus::Candidate) throw std::logic_error("report already decided");
  status_ = ReportStatus::Confirmed;
}

void BugReport::refute() {
  if (status_ != ReportStatus::Candidate) throw std::logic_error("report already decided");
  status_ = ReportStatus::Refuted;
}

std::vector<BugReport> makeReports(const symexec::ExplodedGraph& graph, const std::string& file) {
  std::vector<BugReport> out;
  for (const auto& eps : graph.epsilons) {
    BugReport r;
    r.checker = eps->event->checker;
    r.file = file;
    r.loc = eps->event->loc;
    r.length = eps->event->length;
    r.message = eps->event->message;
    r.path = symexec::extractPath(eps);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<BugReport>> group(std::vector<BugReport> reports) {
  using Key = std::tuple<std::string, int, SourceLoc>;
  std::map<Key, std::size_t> index;
  std::vector<std::vector<BugReport>> groups;
  for (auto& r : reports) {
    Key key{r.file, static_cast<int>(r.checker), r.loc};
    auto [it, inserted] = index.emplace(key, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(std::move(r));
  }
  for (auto& g : groups)
    std::stable_sort(g.begin(), g.end(),
                     [](const BugReport& a, const BugReport& b) { return a.pathLength() < b.pathLength(); });
  return groups;
}

std::vector<BugReport> dedup(std::vector<BugReport> reports) {
  std::vector<BugReport> out;
  for (auto& g : group(std::move(reports))) out.push_back(std::move(g.front()));
  return out;
}

namespace {

std::string sourceLine(const SourceMap& sources, const std::string& file, uint32_t line) {
  auto it = sources.find(file);
  if (it == sources.end() || line == 0) return {};
  std::istringstream in(it->second);
  std::string text;
  for (uint32_t i = 0; i < line && std::getline(in, text); ++i) {
  }
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return text;
}

std::string caret(const std::string& text, uint32_t col, uint32_t length) {
  std::string out;
  for (uint32_t i = 0; i + 1 < col; ++i) out += (i < text.size() && text[i] == '\t') ? '\t' : ' ';
  out += '^';
  const std::size_t avail = text.size() >= col ? text.size() - col : 0;
  out += std::string(std::min<std::size_t>(length ? length - 1 : 0, avail), '~');
  return out;
}

}  // namespace

std::string render(const std::vector<BugReport>& reports, Format format, const SourceMap& sources,
                   bool show_refuted) {
  if (format == Format::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json o;
      o["checker"] = checkers::checkerName(r.checker);
      o["file"] = r.file;
      o["line"] = r.loc.line;
      o["col"] = r.loc.column;
      o["message"] = r.message;
      o["status"] = statusName(r.status());
      o["path_length"] = r.pathLength();
      arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
  }

  std::ostringstream os;
  std::size_t warnings = 0;
  for (const auto& r : reports) {
    const bool refuted = r.status() == ReportStatus::Refuted;
    if (refuted && !show_refuted) continue;
    if (!refuted) ++warnings;
    os << r.file << ":" << r.loc.line << ":" << r.loc.column << ": warning: " << r.message;
    if (refuted) os << " [refuted]";
    os << "\n";
    const std::string text = sourceLine(sources, r.file, r.loc.line);
    os << text << "\n" << caret(text, r.loc.column, r.length) << "\n";
  }
  os << warnings << (warnings == 1 ? " warning" : " warnings") << " generated.\n";
  return os.str();
}

}  // namespace refutelint::reports
