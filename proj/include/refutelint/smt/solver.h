#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

#include "refutelint/smt/formula.h"

namespace refutelint::smt {

struct SolverVerdict {
  enum class Result { Sat, Unsat, Unknown };
  enum class Reason { None, Timeout, SolverError, OverBudget };

  Result result = Result::Unknown;
  Reason reason = Reason::SolverError;
  std::string detail;

  static SolverVerdict sat() { return {Result::Sat, Reason::None, {}}; }
  static SolverVerdict unsat() { return {Result::Unsat, Reason::None, {}}; }
  static SolverVerdict unknown(Reason reason, std::string detail = {}) {
    return {Result::Unknown, reason, std::move(detail)};
  }

  bool isSat() const { return result == Result::Sat; }
  bool isUnsat() const { return result == Result::Unsat; }
  bool isUnknown() const { return result == Result::Unknown; }

  /// "sat", "unsat", or "unknown(<reason>)".
  std::string str() const;
};

/// The solver process could not be started.
class SolverUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverBackend {
  enum class Kind { Builtin, External };

  static constexpr unsigned kMaxBuiltinBits = 24;

  Kind kind = Kind::Builtin;
  std::string command;  // External: shell command, `{file}` replaced by the query file
  unsigned max_bits = kMaxBuiltinBits;
  std::chrono::milliseconds timeout{15000};

  static SolverBackend builtin(unsigned max_bits = kMaxBuiltinBits);
  static SolverBackend external(std::string command);

  /// "builtin" selects the enumerator, anything else is an external command.
  static SolverBackend parse(const std::string& spec);

  /// Throws std::invalid_argument on a non-positive timeout or a builtin
  /// bit budget above 24.
  void validate() const;
  std::string str() const;
};

struct BuiltinOptions {
  unsigned max_bits = SolverBackend::kMaxBuiltinBits;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Enumerate only the symbol bits some assertion can observe. Without it
  /// every declared bit counts against the budget.
  bool demanded_bits_only = true;
};

/// Exhaustive enumeration over the symbols of `f`. Returns UNKNOWN
/// (over-budget) when more than `max_bits` bits would have to be enumerated.
SolverVerdict checkSatBuiltin(const SmtFormula& f, const BuiltinOptions& options = {});
SolverVerdict checkSatBuiltin(const SmtFormula& f, unsigned max_bits);

/// Runs the external command on the SMT-LIB2 text of `f`. The process is
/// killed when `timeout` expires. Throws SolverUnavailable when the command
/// cannot be started or is not found.
SolverVerdict checkSatExternal(const SmtFormula& f, const std::string& command,
                               std::chrono::milliseconds timeout);

SolverVerdict checkSat(const SmtFormula& f, const SolverBackend& backend);

/// Symbol bits the assertions of `f` can depend on, per declaration.
std::vector<uint64_t> demandedBits(const SmtFormula& f);

}  // namespace refutelint::smt
