// Command-line driver: analyze MiniC files, optionally refute reports with
// an SMT solver, print diagnostics.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "refutelint/driver/driver.h"

using namespace refutelint;

namespace {

bool parseBool(const std::string& s, bool& out) {
  if (s == "true" || s == "1" || s == "yes") return out = true, true;
  if (s == "false" || s == "0" || s == "no") return out = false, true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"refutelint: path-sensitive bug finder for MiniC with SMT refutation"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  driver::RunConfig config;
  std::vector<std::string> inputs;
  std::string crosscheck = "true";
  const char* env_solver = std::getenv("REFUTELINT_SOLVER");
  std::string solver = env_solver && *env_solver ? env_solver : "builtin";
  long long timeout_ms = 15000;
  std::string format = "text";
  unsigned max_unroll = config.budget.max_loop_unrollings;
  std::string corpus;
  bool dump_graph = false;

  app.add_option("inputs", inputs, "MiniC source files");
  app.add_option("--crosscheck-with-smt", crosscheck, "Refute reports with an SMT solver (true|false)")
      ->default_str("true");
  app.add_option("--solver", solver,
                 "builtin, or a shell command reading SMT-LIB2 from stdin or from {file} "
                 "(default: $REFUTELINT_SOLVER or builtin)");
  app.add_option("--timeout-ms", timeout_ms, "Per-report solver time limit in milliseconds")->default_str("15000");
  app.add_option("--format", format, "Output format (text|json)")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--show-refuted", config.show_refuted, "Also list refuted reports");
  app.add_flag("--stats", config.stats, "Print timing and report counts to stderr");
  app.add_option("--jobs", config.jobs, "Files analyzed in parallel")->default_str("1");
  app.add_option("--max-unroll", max_unroll, "Loop unrolling bound")->default_str("4");
  app.add_option("--corpus", corpus, "Analyze every .c file of a directory with and without refutation");
  app.add_flag("--dump-graph", dump_graph, "Print the exploded graph of every function");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!parseBool(crosscheck, config.crosscheck_with_smt)) {
    std::cerr << "error: --crosscheck-with-smt expects true or false\n";
    return 2;
  }
  if (timeout_ms <= 0) {
    std::cerr << "error: --timeout-ms must be positive\n";
    return 2;
  }
  config.solver = smt::SolverBackend::parse(solver);
  config.solver.timeout = std::chrono::milliseconds(timeout_ms);
  config.format = format == "json" ? reports::Format::Json : reports::Format::Text;
  config.budget.max_loop_unrollings = max_unroll;
  config.inputs = inputs;

  try {
    config.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (!corpus.empty()) {
    const auto table = driver::runCorpus(corpus, config);
    std::cout << (config.format == reports::Format::Json ? driver::renderTableJson(table)
                                                         : driver::renderTable(table));
    for (const auto& r : table.rows)
      if (!r.error.empty()) return 2;
    return 0;
  }

  if (dump_graph) {
    for (const auto& in : inputs) {
      const auto res = driver::analyzeFile(in, config, true);
      std::cout << res.graph_dump;
    }
  }
  return driver::run(config, std::cout, std::cerr);
}
