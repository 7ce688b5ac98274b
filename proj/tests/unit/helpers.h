#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "refutelint/frontend/cfg.h"
#include "refutelint/frontend/parser.h"
#include "refutelint/reports/report.h"
#include "refutelint/symexec/engine.h"

namespace testutil {

inline std::string readFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string paritySource() { return readFile(std::string(REFUTELINT_SOURCE_DIR) + "/samples/main.c"); }

/// Keeps the lowered program alive next to the graph built from it.
struct Explored {
  refutelint::frontend::ast::TranslationUnit tu;
  refutelint::frontend::Program program;
  refutelint::symexec::ExplodedGraph graph;
};

inline Explored explore(const std::string& source, const std::string& entry,
                        refutelint::symexec::ExplorationBudget budget = {}) {
  Explored e;
  e.tu = refutelint::frontend::parse(source);
  e.program = refutelint::frontend::lower(e.tu);
  refutelint::symexec::SymbolicExecutor ex(e.program, budget);
  e.graph = ex.execute(entry);
  return e;
}

struct Shell {
  int status = -1;
  std::string out;
};

Shell shell(const std::string& cmd);

/// "z3 -in" when z3 is on PATH, REFUTELINT_EXTERNAL_SOLVER when set, else empty.
std::string externalSolver();

}  // namespace testutil
