#include "intblast/solver_client.hpp"

#include "intblast/errors.hpp"
#include "intblast/frontend.hpp"
#include "intblast/printer.hpp"
#include "intblast/sexpr.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <sstream>
#include <thread>

#include <fcntl.h>
#include <poll.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

extern char **environ;

namespace intblast {

namespace {

void ignore_sigpipe() {
  static const bool once = [] {
    std::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)once;
}

Value value_from_sexpr(const SExpr &e) {
  switch (e.type) {
  case SExpr::Type::Numeral: {
    Integer v = 0;
    for (char c : e.text)
      v = v * 10 + (c - '0');
    return Value::integer(v);
  }
  case SExpr::Type::Binary: {
    Integer v = 0;
    for (char c : e.text)
      v = (v << 1) | (c - '0');
    return Value::bitvec(v, static_cast<unsigned>(e.text.size()));
  }
  case SExpr::Type::Hex: {
    Term t = parse_term("#x" + e.text, {});
    return Value::bitvec(t.value(), t.sort().width());
  }
  case SExpr::Type::Symbol:
    if (e.is_symbol("true"))
      return Value::boolean(true);
    if (e.is_symbol("false"))
      return Value::boolean(false);
    break;
  case SExpr::Type::List:
    if (e.items.size() == 2 && e.items[0].is_symbol("-") &&
        e.items[1].type == SExpr::Type::Numeral) {
      Value v = value_from_sexpr(e.items[1]);
      return Value::integer(-v.num);
    }
    if (e.items.size() == 3 && e.items[0].is_symbol("_")) {
      Term t = build_term(e, {});
      if (t.sort().is_bitvec())
        return Value::bitvec(t.value(), t.sort().width());
    }
    break;
  default:
    break;
  }
  throw BackendError("unexpected value in solver model");
}

} // namespace

SolverCommand SolverCommand::parse(std::string_view line) {
  SolverCommand cmd;
  std::istringstream in{std::string(line)};
  std::string word;
  while (in >> word)
    cmd.argv.push_back(word);
  return cmd;
}

std::string SolverCommand::to_string() const {
  std::string out;
  for (const std::string &a : argv) {
    if (!out.empty())
      out += ' ';
    out += a;
  }
  return out;
}

std::string_view check_result_name(CheckResult r) {
  switch (r) {
  case CheckResult::Sat:
    return "sat";
  case CheckResult::Unsat:
    return "unsat";
  case CheckResult::Unknown:
    return "unknown";
  }
  return {};
}

SolverSession::SolverSession(const SolverCommand &command, std::string logic,
                             bool unsat_assumptions)
    : logic_(std::move(logic)) {
  if (command.empty())
    throw SpawnError("empty solver command");
  ignore_sigpipe();

  int in_pipe[2], out_pipe[2];
  if (pipe2(in_pipe, O_CLOEXEC) != 0)
    throw SpawnError(std::string("pipe: ") + std::strerror(errno));
  if (pipe2(out_pipe, O_CLOEXEC) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    throw SpawnError(std::string("pipe: ") + std::strerror(errno));
  }

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in_pipe[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);

  std::vector<char *> argv;
  for (const std::string &a : command.argv)
    argv.push_back(const_cast<char *>(a.c_str()));
  argv.push_back(nullptr);

  int rc = posix_spawnp(&pid_, argv[0], &actions, nullptr, argv.data(),
                        environ);
  posix_spawn_file_actions_destroy(&actions);
  close(in_pipe[0]);
  close(out_pipe[1]);
  if (rc != 0) {
    close(in_pipe[1]);
    close(out_pipe[0]);
    pid_ = -1;
    throw SpawnError("cannot start '" + command.to_string() +
                     "': " + std::strerror(rc));
  }
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  state_ = State::Idle;

  expect_success("(set-option :print-success true)");
  expect_success("(set-option :produce-models true)");
  if (unsat_assumptions)
    expect_success("(set-option :produce-unsat-assumptions true)");
  expect_success("(set-logic " + logic_ + ")");
}

SolverSession::~SolverSession() {
  if (pid_ < 0)
    return;
  if (state_ != State::Dead && to_child_ >= 0) {
    static const char bye[] = "(exit)\n";
    [[maybe_unused]] ssize_t n = write(to_child_, bye, sizeof bye - 1);
  }
  if (to_child_ >= 0)
    close(to_child_);
  to_child_ = -1;
  for (int i = 0; i < 50; ++i) {
    if (waitpid(pid_, nullptr, WNOHANG) == pid_) {
      pid_ = -1;
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }
  if (pid_ >= 0)
    kill_child();
  if (from_child_ >= 0)
    close(from_child_);
}

void SolverSession::kill_child() {
  if (pid_ >= 0) {
    kill(pid_, SIGKILL);
    waitpid(pid_, nullptr, 0);
    pid_ = -1;
  }
  state_ = State::Dead;
}

void SolverSession::fail(const std::string &msg) {
  kill_child();
  throw BackendError(msg);
}

void SolverSession::send(const std::string &command) {
  if (state_ == State::Dead)
    throw BackendError("solver session is dead");
  if (trace_)
    *trace_ << command << '\n';
  std::string line = command + "\n";
  std::size_t off = 0;
  while (off < line.size()) {
    ssize_t n = write(to_child_, line.data() + off, line.size() - off);
    if (n < 0) {
      if (errno == EINTR)
        continue;
      fail(std::string("write to solver failed: ") + std::strerror(errno));
    }
    off += static_cast<std::size_t>(n);
  }
  state_ = State::AwaitingResponse;
}

std::optional<std::string> SolverSession::read_response(Deadline deadline) {
  for (;;) {
    std::size_t end = complete_sexpr_end(buffer_);
    if (end == std::string::npos && eof_) {
      // A trailing atom without a delimiter is complete at end of stream.
      std::size_t first = buffer_.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && buffer_[first] != '(')
        end = buffer_.size();
    }
    if (end != std::string::npos) {
      std::string out = buffer_.substr(0, end);
      buffer_.erase(0, end);
      std::size_t first = out.find_first_not_of(" \t\r\n");
      state_ = State::Idle;
      return first == std::string::npos ? std::string() : out.substr(first);
    }
    if (eof_)
      fail("solver exited unexpectedly");

    int timeout_ms = -1;
    if (deadline) {
      auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          *deadline - Clock::now());
      if (left.count() <= 0) {
        kill_child();
        return std::nullopt;
      }
      timeout_ms = static_cast<int>(std::min<long long>(left.count(), 1 << 30));
    }
    pollfd pfd{from_child_, POLLIN, 0};
    int rc = poll(&pfd, 1, timeout_ms);
    if (rc < 0) {
      if (errno == EINTR)
        continue;
      fail(std::string("poll failed: ") + std::strerror(errno));
    }
    if (rc == 0)
      continue; // deadline check at the top of the loop
    char chunk[4096];
    ssize_t n = read(from_child_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR)
        continue;
      fail(std::string("read from solver failed: ") + std::strerror(errno));
    }
    if (n == 0)
      eof_ = true;
    else
      buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

void SolverSession::expect_success(const std::string &command) {
  send(command);
  std::string reply = *read_response(std::nullopt);
  if (reply != "success")
    fail("solver rejected '" + command + "': " + reply);
}

void SolverSession::declare_symbols(const Term &t) {
  if (state_ == State::Dead)
    throw BackendError("solver session is dead");
  for (const Term &s : post_order(t)) {
    if (s.kind() != Kind::Var && s.kind() != Kind::Apply)
      continue;
    if (declared_.count(s.name()))
      continue;
    std::vector<Sort> params;
    for (const Term &c : s.children())
      params.push_back(c.sort());
    expect_success(declaration_text(s.name(), params, s.sort()));
    declared_.insert(s.name());
  }
}

void SolverSession::assert_term(const Term &t) {
  if (!t.sort().is_bool())
    throw SortError("only Bool terms can be asserted");
  declare_symbols(t);
  expect_success("(assert " + to_smtlib(t) + ")");
}

CheckResult SolverSession::check(Deadline deadline) {
  send("(check-sat)");
  std::optional<std::string> answer = read_response(deadline);
  if (!answer)
    return CheckResult::Unknown;
  const std::string &reply = *answer;
  if (reply == "sat")
    return CheckResult::Sat;
  if (reply == "unsat")
    return CheckResult::Unsat;
  if (reply == "unknown")
    return CheckResult::Unknown;
  fail("unexpected check-sat answer: " + reply);
}

AssumptionCheck SolverSession::check_assuming(
    const std::vector<std::pair<std::string, Term>> &assumptions,
    Deadline deadline) {
  AssumptionCheck out;
  if (assumptions.empty()) {
    out.result = check(deadline);
    return out;
  }
  std::string names;
  std::unordered_set<std::string> known;
  for (const auto &[name, term] : assumptions) {
    Term indicator = mk_var(name, Sort::boolean());
    assert_term(mk_implies(indicator, term));
    known.insert(name);
    names += (names.empty() ? "" : " ") + quote_symbol(name);
  }
  send("(check-sat-assuming (" + names + "))");
  std::optional<std::string> answer = read_response(deadline);
  if (!answer)
    return out;
  const std::string &reply = *answer;
  if (reply == "sat") {
    out.result = CheckResult::Sat;
  } else if (reply == "unknown") {
    out.result = CheckResult::Unknown;
  } else if (reply == "unsat") {
    out.result = CheckResult::Unsat;
    send("(get-unsat-assumptions)");
    std::optional<std::string> core_text = read_response(deadline);
    if (!core_text) {
      out.result = CheckResult::Unknown;
      return out;
    }
    const std::string &core = *core_text;
    std::vector<SExpr> parsed;
    try {
      parsed = parse_sexprs(core);
    } catch (const ParseError &e) {
      fail(std::string("malformed unsat assumptions: ") + e.what());
    }
    if (parsed.size() != 1 || !parsed[0].is_list())
      fail("malformed unsat assumptions: " + core);
    for (const SExpr &e : parsed[0].items) {
      if (e.type != SExpr::Type::Symbol || !known.count(e.text))
        fail("unsat core names an unknown assumption: " + core);
      out.core.push_back(e.text);
    }
  } else {
    fail("unexpected check-sat-assuming answer: " + reply);
  }
  return out;
}

std::vector<Value> SolverSession::get_values(const std::vector<Term> &terms) {
  if (terms.empty())
    return {};
  std::string request = "(get-value (";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i)
      request += ' ';
    request += to_smtlib(terms[i]);
  }
  request += "))";
  send(request);
  std::string reply = *read_response(std::nullopt);
  std::vector<SExpr> parsed;
  try {
    parsed = parse_sexprs(reply);
  } catch (const ParseError &e) {
    fail(std::string("malformed get-value response: ") + e.what());
  }
  if (parsed.size() != 1 || !parsed[0].is_list() ||
      parsed[0].items.size() != terms.size())
    fail("get-value response does not match the request: " + reply);
  std::vector<Value> values;
  values.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const SExpr &pair = parsed[0].items[i];
    if (!pair.is_list() || pair.items.size() != 2)
      fail("malformed get-value entry: " + reply);
    Value v;
    try {
      v = value_from_sexpr(pair.items[1]);
    } catch (const Error &e) {
      fail(e.what());
    }
    if (!(v.sort() == terms[i].sort()))
      fail("get-value returned a value of the wrong sort for " +
           to_smtlib(terms[i]));
    values.push_back(std::move(v));
  }
  return values;
}

Value parse_model_value(std::string_view text) {
  auto parsed = parse_sexprs(text);
  if (parsed.size() != 1)
    throw BackendError("expected exactly one value");
  return value_from_sexpr(parsed.front());
}

} // namespace intblast
