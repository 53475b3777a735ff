// intblast: decide QF_BV scripts by translation to nonlinear integer
// arithmetic with lazy refinement.

#include "intblast/cegar.hpp"
#include "intblast/errors.hpp"
#include "intblast/frontend.hpp"
#include "intblast/oracle.hpp"
#include "intblast/printer.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace intblast;

constexpr int kExitOk = 0;
constexpr int kExitUnknown = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBackend = 3;

struct Options {
  std::string input;
  std::string nia_solver;
  std::string bv_solver;
  bool no_underapprox = false;
  unsigned escalation_threshold = 8;
  unsigned max_iterations = 10000;
  std::uint64_t timeout_ms = 0;
  bool get_model = false;
  bool stats = false;
  std::string dump_translation;
  std::string dump_preprocessed;
  std::string dump_lemmas;
  bool oracle = false;
  bool expand_on_unknown = false;
  bool underapprox_after_refine = false;
};

std::string env_or_empty(const char *name) {
  const char *v = std::getenv(name);
  return v ? v : "";
}

int usage_error(const std::string &msg) {
  std::cerr << "intblast: " << msg << '\n';
  return kExitUsage;
}

void print_model(const Script &script, const Assignment &model) {
  std::cout << "(model\n";
  for (const Declaration &d : script.declarations) {
    if (d.is_function())
      continue;
    auto it = model.find(d.name);
    if (it == model.end())
      continue;
    std::cout << "  (define-fun " << quote_symbol(d.name) << " () "
              << d.sort.to_string() << ' ' << it->second.to_smtlib() << ")\n";
  }
  std::cout << ")\n";
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream f(path);
  if (!f)
    throw std::runtime_error("cannot write " + path);
  f << text;
}

int run_oracle(const Options &opt, const Script &script) {
  Script s = expand_defines(script);
  if (s.is_integer_problem())
    return usage_error("--oracle only handles bit-vector scripts");
  Verdict verdict = Verdict::Unknown;
  std::optional<Assignment> model;
  try {
    oracle::SatResult r = oracle::brute_force_sat(s.formula());
    verdict = r.sat ? Verdict::Sat : Verdict::Unsat;
    if (r.sat)
      model = complete_model(s.declarations, r.model);
  } catch (const BudgetExceeded &e) {
    std::cerr << "intblast: " << e.what() << '\n';
  }
  std::cout << verdict_name(verdict) << '\n';
  if (opt.get_model && model)
    print_model(s, *model);
  if (opt.stats)
    std::cerr << SolveStats{}.to_json(verdict) << '\n';
  return verdict == Verdict::Unknown ? kExitUnknown : kExitOk;
}

int run(const Options &opt, const Script &script) {
  if (!opt.dump_preprocessed.empty() && !script.is_integer_problem()) {
    std::ostringstream os;
    print_preprocessed(os, script);
    write_file(opt.dump_preprocessed, os.str());
  }
  if (!opt.dump_translation.empty()) {
    std::ostringstream os;
    print_translation(os, script);
    write_file(opt.dump_translation, os.str());
  }
  if (opt.oracle)
    return run_oracle(opt, script);

  Config cfg;
  cfg.nia_solver = SolverCommand::parse(opt.nia_solver);
  if (!opt.bv_solver.empty())
    cfg.bv_solver = SolverCommand::parse(opt.bv_solver);
  cfg.underapprox_enabled = !opt.no_underapprox;
  cfg.escalation_threshold = opt.escalation_threshold;
  cfg.max_iterations = opt.max_iterations;
  if (opt.timeout_ms > 0)
    cfg.timeout_ms = opt.timeout_ms;
  cfg.expand_on_unknown = opt.expand_on_unknown;
  cfg.underapprox_after_refine = opt.underapprox_after_refine;

  std::vector<Lemma> lemmas;
  SolveHooks hooks;
  if (!opt.dump_lemmas.empty())
    hooks.on_lemma = [&lemmas](const Lemma &l) { lemmas.push_back(l); };

  SolveResult r = solve(script, cfg, hooks);
  if (!opt.dump_lemmas.empty()) {
    std::ostringstream os;
    print_lemmas(os, lemmas);
    write_file(opt.dump_lemmas, os.str());
  }
  std::cout << verdict_name(r.verdict) << '\n';
  if (opt.get_model && r.model)
    print_model(script, *r.model);
  if (opt.stats)
    std::cerr << r.stats.to_json(r.verdict) << '\n';
  if (!r.diagnostic.empty())
    std::cerr << "intblast: " << r.diagnostic << '\n';
  if (r.backend_error)
    return kExitBackend;
  return r.verdict == Verdict::Unknown ? kExitUnknown : kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  Options opt;
  CLI::App app{"Decide QF_BV formulas via integer arithmetic and refinement"};
  app.add_option("file", opt.input, "SMT-LIB 2 script (stdin if omitted)");
  auto *nia = app.add_option("--nia-solver", opt.nia_solver,
                             "QF_UFNIA solver command line");
  auto *bv = app.add_option("--bv-solver", opt.bv_solver,
                            "QF_BV solver command line for under-approximation");
  app.add_flag("--no-underapprox", opt.no_underapprox,
               "disable the under-approximation check");
  app.add_option("--escalation-threshold", opt.escalation_threshold,
                 "instance lemmas per application before full expansion")
      ->check(CLI::Range(1u, 1000000u));
  app.add_option("--max-iterations", opt.max_iterations, "iteration limit")
      ->check(CLI::Range(1u, 1000000000u));
  app.add_option("--timeout-ms", opt.timeout_ms, "wall-clock limit")
      ->check(CLI::PositiveNumber);
  app.add_flag("--get-model", opt.get_model, "print a model after sat");
  app.add_flag("--stats", opt.stats, "print statistics as JSON on stderr");
  app.add_option("--dump-translation", opt.dump_translation,
                 "write the integer translation to PATH");
  app.add_option("--dump-preprocessed", opt.dump_preprocessed,
                 "write the preprocessed formula to PATH");
  app.add_option("--dump-lemmas", opt.dump_lemmas,
                 "write every refinement lemma to PATH");
  app.add_flag("--oracle", opt.oracle,
               "decide by enumeration instead of the external solvers");
  app.add_flag("--expand-on-unknown", opt.expand_on_unknown,
               "on unknown from the integer solver, expand everything once");
  app.add_flag("--underapprox-after-refine", opt.underapprox_after_refine,
               "run the under-approximation check after refinement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (nia->count() > 0 && opt.nia_solver.find_first_not_of(" \t") ==
                              std::string::npos)
    return usage_error("--nia-solver must not be empty");
  if (bv->count() > 0 &&
      opt.bv_solver.find_first_not_of(" \t") == std::string::npos)
    return usage_error("--bv-solver must not be empty");
  if (nia->count() == 0)
    opt.nia_solver = env_or_empty("INTBLAST_NIA_SOLVER");
  if (bv->count() == 0)
    opt.bv_solver = env_or_empty("INTBLAST_BV_SOLVER");
  if (!opt.oracle &&
      opt.nia_solver.find_first_not_of(" \t") == std::string::npos)
    return usage_error("no integer solver: pass --nia-solver or set "
                       "INTBLAST_NIA_SOLVER");

  Script script;
  try {
    if (opt.input.empty() || opt.input == "-") {
      script = parse_script(std::cin);
    } else {
      std::ifstream in(opt.input);
      if (!in)
        return usage_error("cannot open " + opt.input);
      script = parse_script(in);
    }
  } catch (const Error &e) {
    return usage_error(e.what());
  }

  try {
    return run(opt, script);
  } catch (const BackendError &e) {
    std::cerr << "intblast: " << e.what() << '\n';
    return kExitBackend;
  } catch (const Error &e) {
    return usage_error(e.what());
  } catch (const std::exception &e) {
    std::cerr << "intblast: " << e.what() << '\n';
    return kExitBackend;
  }
}
