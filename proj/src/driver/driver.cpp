#include "refutelint/driver/driver.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "refutelint/frontend/cfg.h"
#include "refutelint/frontend/parser.h"
#include "refutelint/refute/refute.h"

namespace refutelint::driver {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

bool readFile(const std::string& path, std::string& out) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) return false;
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

void RunConfig::validate() const {
  solver.validate();
  budget.validate();
  if (jobs == 0) throw std::invalid_argument("--jobs must be positive");
}

FileResult analyzeSource(const std::string& name, const std::string& source, const RunConfig& config,
                         bool dump_graph) {
  FileResult res;
  res.file = name;
  res.source = source;
  const auto start = Clock::now();
  std::vector<reports::BugReport> candidates;
  try {
    const auto tu = frontend::parse(source);
    const auto program = frontend::lower(tu);
    symexec::SymbolicExecutor exec(program, config.budget);
    for (const auto& fn : program.functions) {
      symexec::ExplodedGraph g = exec.execute(fn.name);
      if (dump_graph) res.graph_dump += "graph " + fn.name + "\n" + g.dump();
      for (auto& r : reports::makeReports(g, name)) candidates.push_back(std::move(r));
    }
  } catch (const frontend::FrontendError& e) {
    res.error = name + ":" + e.what();
    res.analysis_seconds = since(start);
    return res;
  } catch (const std::exception& e) {
    res.error = name + ": internal error: " + e.what();
    res.analysis_seconds = since(start);
    return res;
  }

  auto groups = reports::group(std::move(candidates));
  res.reported = groups.size();
  res.analysis_seconds = since(start);

  const auto ref_start = Clock::now();
  for (auto& members : groups) {
    // A key is refuted only when every path reaching it is infeasible.
    std::size_t keep = 0;
    bool refuted = config.crosscheck_with_smt && !res.solver_unavailable;
    if (refuted) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        refute::Refutation r;
        try {
          r = refute::refuteReport(members[i], config.solver);
        } catch (const smt::SolverUnavailable& e) {
          res.solver_unavailable = true;
          res.error = e.what();
          refuted = false;
          keep = i;
          break;
        }
        res.queries.push_back({members[i].loc, r.verdict.str(), r.seconds});
        if (r.status == reports::ReportStatus::Confirmed) {
          refuted = false;
          keep = i;
          break;
        }
      }
    }
    reports::BugReport rep = std::move(members[keep]);
    if (refuted) {
      rep.refute();
      ++res.refuted;
    } else {
      rep.confirm();
    }
    res.reports.push_back(std::move(rep));
  }
  res.refutation_seconds = since(ref_start);
  std::stable_sort(res.reports.begin(), res.reports.end(),
                   [](const reports::BugReport& a, const reports::BugReport& b) {
                     return std::tie(a.loc, a.checker) < std::tie(b.loc, b.checker);
                   });
  return res;
}

FileResult analyzeFile(const std::string& path, const RunConfig& config, bool dump_graph) {
  std::string source;
  if (!readFile(path, source)) {
    FileResult res;
    res.file = path;
    res.error = path + ": cannot read file";
    return res;
  }
  return analyzeSource(path, source, config, dump_graph);
}

namespace {

template <typename F>
void parallelFor(std::size_t n, unsigned jobs, F&& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (config.inputs.empty()) {
    err << "error: no input files\n";
    return 2;
  }
  std::vector<FileResult> results(config.inputs.size());
  parallelFor(results.size(), config.jobs,
              [&](std::size_t i) { results[i] = analyzeFile(config.inputs[i], config); });

  bool failed = false;
  std::size_t confirmed = 0, reported = 0, refuted = 0;
  double analysis = 0, refutation = 0;
  std::vector<reports::BugReport> all;
  reports::SourceMap sources;
  for (auto& r : results) {
    if (r.solver_unavailable) {
      err << "warning: " << r.error << "; keeping all reports\n";
      failed = true;
    } else if (!r.error.empty()) {
      err << "error: " << r.error << "\n";
      failed = true;
    }
    reported += r.reported;
    refuted += r.refuted;
    analysis += r.analysis_seconds;
    refutation += r.refutation_seconds;
    sources[r.file] = r.source;
    for (auto& rep : r.reports) {
      if (rep.status() == reports::ReportStatus::Confirmed) ++confirmed;
      all.push_back(std::move(rep));
    }
  }
  out << reports::render(all, config.format, sources, config.show_refuted);

  if (config.stats) {
    err << std::fixed << std::setprecision(6);
    err << "time without refutation: " << analysis << " s\n";
    err << "time with refutation:    " << analysis + refutation << " s\n";
    err << "reported: " << reported << "\n";
    err << "refuted:  " << refuted << "\n";
  }
  if (failed) return 2;
  return confirmed ? 1 : 0;
}

CorpusTable runCorpus(const std::string& dir, const RunConfig& config) {
  CorpusTable table;
  std::vector<std::string> files;
  std::error_code ec;
  if (fs::is_directory(dir, ec))
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".c") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  RunConfig off = config;
  off.crosscheck_with_smt = false;
  RunConfig on = config;
  on.crosscheck_with_smt = true;

  table.rows.resize(files.size());
  std::vector<double> max_query(files.size(), 0);
  parallelFor(files.size(), config.jobs, [&](std::size_t i) {
    CorpusRow& row = table.rows[i];
    row.file = fs::path(files[i]).filename().string();
    auto t0 = Clock::now();
    FileResult a = analyzeFile(files[i], off);
    row.time_no_ref = since(t0);
    t0 = Clock::now();
    FileResult b = analyzeFile(files[i], on);
    row.time_with_ref = since(t0);
    row.reported = a.reported;
    row.refuted = b.refuted;
    row.error = !a.error.empty() ? a.error : b.error;
    for (const auto& q : b.queries) max_query[i] = std::max(max_query[i], q.seconds);
  });

  table.totals.file = "TOTAL";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    table.totals.time_no_ref += r.time_no_ref;
    table.totals.time_with_ref += r.time_with_ref;
    table.totals.reported += r.reported;
    table.totals.refuted += r.refuted;
    table.max_query_seconds = std::max(table.max_query_seconds, max_query[i]);
  }
  return table;
}

std::string renderTable(const CorpusTable& table) {
  std::size_t name_w = 5;
  for (const auto& r : table.rows) name_w = std::max(name_w, r.file.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_w)) << "file" << std::right << std::setw(14)
     << "time-no-ref" << std::setw(15) << "time-with-ref" << std::setw(10) << "reported" << std::setw(9)
     << "refuted" << "\n";
  auto line = [&](const CorpusRow& r) {
    os << std::left << std::setw(static_cast<int>(name_w)) << r.file << std::right << std::fixed
       << std::setprecision(6) << std::setw(14) << r.time_no_ref << std::setw(15) << r.time_with_ref
       << std::setw(10) << r.reported << std::setw(9) << r.refuted;
    if (!r.error.empty()) os << "  error: " << r.error;
    os << "\n";
  };
  for (const auto& r : table.rows) line(r);
  line(table.totals);
  return os.str();
}

std::string renderTableJson(const CorpusTable& table) {
  auto row = [](const CorpusRow& r) {
    nlohmann::ordered_json o;
    o["file"] = r.file;
    o["time_no_ref"] = r.time_no_ref;
    o["time_with_ref"] = r.time_with_ref;
    o["reported"] = r.reported;
    o["refuted"] = r.refuted;
    if (!r.error.empty()) o["error"] = r.error;
    return o;
  };
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) doc["rows"].push_back(row(r));
  doc["totals"] = row(table.totals);
  return doc.dump(2) + "\n";
}

}  // namespace refutelint::driver
