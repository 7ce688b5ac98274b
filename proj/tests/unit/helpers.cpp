#include "helpers.h"

#include <sys/wait.h>

#include <array>

namespace testutil {

Shell shell(const std::string& cmd) {
  Shell r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string externalSolver() {
  if (const char* env = std::getenv("REFUTELINT_EXTERNAL_SOLVER")) return env;
  static const bool has_z3 = shell("command -v z3 >/dev/null 2>&1").status == 0;
  return has_z3 ? "z3 -in" : "";
}

}  // namespace testutil
