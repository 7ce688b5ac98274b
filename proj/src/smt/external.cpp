#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "refutelint/smt/solver.h"

extern char** environ;

namespace refutelint::smt {

std::string SolverVerdict::str() const {
  switch (result) {
    case Result::Sat: return "sat";
    case Result::Unsat: return "unsat";
    case Result::Unknown: break;
  }
  switch (reason) {
    case Reason::Timeout: return "unknown(timeout)";
    case Reason::OverBudget: return "unknown(over-budget)";
    default: return "unknown(solver-error)";
  }
}

SolverBackend SolverBackend::builtin(unsigned max_bits) {
  SolverBackend b;
  b.kind = Kind::Builtin;
  b.max_bits = max_bits;
  return b;
}

SolverBackend SolverBackend::external(std::string command) {
  SolverBackend b;
  b.kind = Kind::External;
  b.command = std::move(command);
  return b;
}

SolverBackend SolverBackend::parse(const std::string& spec) {
  if (spec.empty() || spec == "builtin") return builtin();
  return external(spec);
}

void SolverBackend::validate() const {
  if (timeout.count() <= 0) throw std::invalid_argument("solver timeout must be positive");
  if (kind == Kind::Builtin && max_bits > kMaxBuiltinBits)
    throw std::invalid_argument("builtin solver budget is at most 24 bits");
  if (kind == Kind::External && command.empty()) throw std::invalid_argument("empty solver command");
}

std::string SolverBackend::str() const {
  return kind == Kind::Builtin ? "builtin" : command;
}

namespace {

std::string shellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    std::string tmpl = (std::filesystem::temp_directory_path() / "refutelint-XXXXXX.smt2").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    const int fd = mkstemps(buf.data(), 5);
    if (fd < 0) throw SolverUnavailable(std::string("cannot create query file: ") + std::strerror(errno));
    path_ = buf.data();
    std::size_t off = 0;
    while (off < contents.size()) {
      const ssize_t n = ::write(fd, contents.data() + off, contents.size() - off);
      if (n <= 0) break;
      off += static_cast<std::size_t>(n);
    }
    ::close(fd);
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

void closeFd(int& fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

}  // namespace

SolverVerdict checkSatExternal(const SmtFormula& f, const std::string& command,
                               std::chrono::milliseconds timeout) {
  // A solver that exits before reading its input must not take us down.
  static std::once_flag ignore_sigpipe;
  std::call_once(ignore_sigpipe, [] { ::signal(SIGPIPE, SIG_IGN); });

  const std::string text = emitSmtLib(f);
  std::string cmd = command;
  std::optional<TempFile> file;
  const auto pos = cmd.find("{file}");
  if (pos != std::string::npos) {
    file.emplace(text);
    while (true) {
      const auto p = cmd.find("{file}");
      if (p == std::string::npos) break;
      cmd.replace(p, 6, shellQuote(file->path()));
    }
  }
  const std::string input = file ? std::string() : text;

  int in_pipe[2], out_pipe[2];
  if (pipe2(in_pipe, O_CLOEXEC) != 0) throw SolverUnavailable("pipe failed");
  if (pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw SolverUnavailable("pipe failed");
  }

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in_pipe[0], 0);
  posix_spawn_file_actions_adddup2(&actions, out_pipe[1], 1);
  posix_spawn_file_actions_addopen(&actions, 2, "/dev/null", O_WRONLY, 0);
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);

  const char* argv[] = {"/bin/sh", "-c", cmd.c_str(), nullptr};
  pid_t pid = -1;
  const int rc = posix_spawn(&pid, "/bin/sh", &actions, &attr, const_cast<char* const*>(argv), environ);
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  int wfd = in_pipe[1];
  int rfd = out_pipe[0];
  if (rc != 0) {
    closeFd(wfd);
    closeFd(rfd);
    throw SolverUnavailable("cannot start solver '" + command + "': " + std::strerror(rc));
  }
  fcntl(wfd, F_SETFL, O_NONBLOCK);
  if (input.empty()) closeFd(wfd);

  const auto deadline = std::chrono::steady_clock::now() + timeout;
  std::string output;
  std::size_t written = 0;
  bool timed_out = false;
  while (rfd >= 0) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    pollfd fds[2];
    int n = 0;
    fds[n++] = {rfd, POLLIN, 0};
    if (wfd >= 0) fds[n++] = {wfd, POLLOUT, 0};
    const int r = ::poll(fds, n, static_cast<int>(std::min<long long>(left.count(), 1000)));
    if (r < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (wfd >= 0 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t k = ::write(wfd, input.data() + written, input.size() - written);
      if (k > 0) written += static_cast<std::size_t>(k);
      if (k < 0 && errno != EAGAIN) closeFd(wfd);
      if (written == input.size()) closeFd(wfd);
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      char buf[4096];
      const ssize_t k = ::read(rfd, buf, sizeof buf);
      if (k > 0) output.append(buf, static_cast<std::size_t>(k));
      else if (k == 0 || errno != EAGAIN) closeFd(rfd);
    }
  }
  closeFd(wfd);
  closeFd(rfd);

  int status = 0;
  if (timed_out) {
    ::kill(-pid, SIGKILL);
    ::waitpid(pid, &status, 0);
    return SolverVerdict::unknown(SolverVerdict::Reason::Timeout,
                                  "killed after " + std::to_string(timeout.count()) + " ms");
  }
  // Output closed; give the process the remaining time to exit.
  while (true) {
    const pid_t w = ::waitpid(pid, &status, WNOHANG);
    if (w == pid) break;
    if (w < 0 && errno != EINTR) break;
    if (std::chrono::steady_clock::now() > deadline) {
      ::kill(-pid, SIGKILL);
      ::waitpid(pid, &status, 0);
      return SolverVerdict::unknown(SolverVerdict::Reason::Timeout,
                                    "killed after " + std::to_string(timeout.count()) + " ms");
    }
    ::usleep(200);
  }

  if (WIFEXITED(status) && (WEXITSTATUS(status) == 126 || WEXITSTATUS(status) == 127))
    throw SolverUnavailable("solver command not runnable: " + command);

  std::istringstream in(output);
  std::string token;
  in >> token;
  const bool exited_ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  if (!exited_ok)
    return SolverVerdict::unknown(SolverVerdict::Reason::SolverError,
                                  "solver exited abnormally" + (token.empty() ? "" : ": " + token));
  if (token == "sat") return SolverVerdict::sat();
  if (token == "unsat") return SolverVerdict::unsat();
  if (token == "unknown") return SolverVerdict::unknown(SolverVerdict::Reason::SolverError, "solver said unknown");
  return SolverVerdict::unknown(SolverVerdict::Reason::SolverError, "unparseable output: " + token);
}

SolverVerdict checkSat(const SmtFormula& f, const SolverBackend& backend) {
  if (backend.kind == SolverBackend::Kind::External)
    return checkSatExternal(f, backend.command, backend.timeout);
  BuiltinOptions o;
  o.max_bits = backend.max_bits;
  o.deadline = std::chrono::steady_clock::now() + backend.timeout;
  return checkSatBuiltin(f, o);
}

}  // namespace refutelint::smt
