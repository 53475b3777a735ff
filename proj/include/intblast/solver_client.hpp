#pragma once

#include "intblast/term.hpp"
#include "intblast/value.hpp"

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <sys/types.h>

namespace intblast {

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

/// Executable plus arguments of an external SMT-LIB 2 solver.
struct SolverCommand {
  std::vector<std::string> argv;

  /// Splits a command line on whitespace. An empty result is allowed; the
  /// caller decides whether that is an error.
  static SolverCommand parse(std::string_view command_line);
  bool empty() const { return argv.empty(); }
  std::string to_string() const;
};

enum class CheckResult { Sat, Unsat, Unknown };

std::string_view check_result_name(CheckResult r);

struct AssumptionCheck {
  CheckResult result = CheckResult::Unknown;
  /// Names of the assumptions in the unsat core (only for Unsat).
  std::vector<std::string> core;
};

/// A child solver process driven over stdin/stdout with strict
/// request/response alternation (`:print-success` is switched on). The
/// child's stderr is inherited. Any protocol failure marks the session dead;
/// every later call throws BackendError.
class SolverSession {
public:
  enum class State { Idle, AwaitingResponse, Dead };

  /// Spawns the solver and sets the logic and model production. With
  /// `unsat_assumptions`, also requires `:produce-unsat-assumptions`.
  /// Throws SpawnError or BackendError.
  SolverSession(const SolverCommand &command, std::string logic,
                bool unsat_assumptions = false);
  ~SolverSession();

  SolverSession(const SolverSession &) = delete;
  SolverSession &operator=(const SolverSession &) = delete;

  /// Declares any new symbols of `t` (once each), then asserts it.
  void assert_term(const Term &t);
  /// Declares every free symbol of `t` without asserting anything.
  void declare_symbols(const Term &t);

  /// `(check-sat)`. Reaching the deadline kills the solver and yields
  /// Unknown.
  CheckResult check(Deadline deadline = std::nullopt);

  /// Guards each assumption with a Boolean indicator named by the caller
  /// (`indicator => term`) and runs `check-sat-assuming` on the indicators.
  /// On Unsat the core is read with `get-unsat-assumptions`.
  AssumptionCheck
  check_assuming(const std::vector<std::pair<std::string, Term>> &assumptions,
                 Deadline deadline = std::nullopt);

  /// `(get-value ...)` after a sat answer. Values come back in the order of
  /// `terms`. Negative integers are rejected.
  std::vector<Value> get_values(const std::vector<Term> &terms);

  State state() const { return state_; }
  const std::string &logic() const { return logic_; }
  /// Echo every command sent to the solver.
  void set_trace(std::ostream *os) { trace_ = os; }

private:
  void send(const std::string &command);
  /// Next complete response; nullopt if the deadline passed (the solver is
  /// killed in that case).
  std::optional<std::string> read_response(Deadline deadline);
  void expect_success(const std::string &command);
  [[noreturn]] void fail(const std::string &msg);
  void kill_child();

  std::string logic_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  State state_ = State::Dead;
  std::string buffer_;
  bool eof_ = false;
  std::unordered_set<std::string> declared_;
  std::ostream *trace_ = nullptr;
};

/// Parses one value of a `get-value` response.
Value parse_model_value(std::string_view text);

} // namespace intblast
