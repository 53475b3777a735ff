// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "exhaustive.hpp"
#include "intblast/cegar.hpp"
#include "intblast/corpus.hpp"
#include "intblast/oracle.hpp"
#include "intblast/printer.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace intblast;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string &title, bool ok, const std::string &detail,
            Clock::time_point start) {
  double secs =
      std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream line;
  line << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << ": " << detail
       << " (" << std::fixed;
  line.precision(1);
  line << secs << " s)";
  std::cout << line.str() << std::endl;
  if (!ok)
    ++failures;
}

bool have_z3() {
  std::string p = INTBLAST_Z3;
  return !p.empty() && p.find("NOTFOUND") == std::string::npos;
}

Config backend(bool underapprox) {
  Config c;
  c.nia_solver = {{INTBLAST_Z3, "-in"}};
  if (underapprox)
    c.bv_solver = SolverCommand{{INTBLAST_Z3, "-in"}};
  c.underapprox_enabled = underapprox;
  return c;
}

void exhaustive(int id, const std::string &title,
                check::Report (*fn)(unsigned), double limit_s) {
  auto start = Clock::now();
  check::Report total;
  for (unsigned w = 1; w <= 4; ++w) {
    check::Report r = fn(w);
    total.checked += r.checked;
    if (r.failures && total.failures == 0)
      total.first_failure = "width " + std::to_string(w) + ": " + r.first_failure;
    total.failures += r.failures;
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::string detail = std::to_string(total.checked) + " cases, " +
                       std::to_string(total.failures) + " failures";
  if (total.failures)
    detail += "; first: " + total.first_failure;
  if (secs > limit_s)
    detail += "; over the " + std::to_string(int(limit_s)) + " s limit";
  report(id, title, total.ok() && secs <= limit_s, detail, start);
}

struct Case {
  std::string name;
  Script script;
  bool oracle_sat;
};

std::vector<Case> corpus_cases() {
  std::vector<Case> cases;
  struct Slice {
    std::uint64_t seed;
    unsigned vars, depth, count;
  };
  for (Slice s : {Slice{11, 1, 2, 100}, Slice{12, 2, 3, 200},
                  Slice{13, 3, 4, 200}}) {
    corpus::GeneratorSpec spec;
    spec.seed = s.seed;
    spec.num_vars = s.vars;
    spec.max_depth = s.depth;
    spec.count = s.count;
    auto scripts = corpus::generate(spec);
    for (std::size_t i = 0; i < scripts.size(); ++i) {
      auto v = corpus::oracle_verdict(scripts[i], oracle::kDefaultBudget);
      cases.push_back({"gen-" + std::to_string(s.seed) + "-" + std::to_string(i),
                       scripts[i], *v});
    }
  }
  for (const corpus::Crafted &c : corpus::crafted_families())
    if (auto v = corpus::oracle_verdict(c.script, oracle::kDefaultBudget))
      cases.push_back({c.name, c.script, *v});
  return cases;
}

struct CorpusRun {
  std::size_t agree = 0;
  std::size_t bad_models = 0;
  std::vector<std::string> mismatches;
  std::size_t underapprox_calls = 0;
  std::size_t underapprox_sat = 0;
  std::vector<Verdict> verdicts;
  std::size_t models_seen = 0;
  std::vector<std::string> repeated_models;
};

CorpusRun run_corpus(const std::vector<Case> &cases, const Config &cfg) {
  CorpusRun run;
  for (const Case &c : cases) {
    std::optional<Model> last;
    SolveHooks hooks;
    hooks.on_model = [&](unsigned iteration, const Model &m) {
      ++run.models_seen;
      if (last && *last == m)
        run.repeated_models.push_back(c.name + " at iteration " +
                                      std::to_string(iteration));
      last = m;
    };
    SolveResult r = solve(c.script, cfg, hooks);
    run.verdicts.push_back(r.verdict);
    run.underapprox_calls += r.stats.underapprox_calls;
    run.underapprox_sat += r.stats.underapprox_sat;
    Verdict want = c.oracle_sat ? Verdict::Sat : Verdict::Unsat;
    if (r.verdict != want) {
      run.mismatches.push_back(c.name + " (" + std::string(verdict_name(r.verdict)) +
                               ", oracle " + std::string(verdict_name(want)) +
                               (r.diagnostic.empty() ? "" : ": " + r.diagnostic) +
                               ")");
      continue;
    }
    if (r.verdict == Verdict::Sat &&
        (!r.model || !oracle::eval(c.script.formula(), *r.model).as_bool())) {
      ++run.bad_models;
      run.mismatches.push_back(c.name + " (model fails)");
      continue;
    }
    ++run.agree;
  }
  return run;
}

std::string first_few(const std::vector<std::string> &xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size() && i < 3; ++i)
    out += (i ? ", " : "") + xs[i];
  return out;
}

struct CliRun {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun cli(const std::string &args, const fs::path &dir) {
  fs::path out = dir / "cli.out", err = dir / "cli.err";
  std::string cmd = "env -u INTBLAST_NIA_SOLVER -u INTBLAST_BV_SOLVER '" +
                    std::string(INTBLAST_CLI) + "' " + args + " >'" +
                    out.string() + "' 2>'" + err.string() + "' </dev/null";
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string solver_flags() {
  std::string z3 = std::string("'") + INTBLAST_Z3 + " -in'";
  return "--nia-solver " + z3 + " --bv-solver " + z3;
}

} // namespace

int main() {
  exhaustive(1, "rewrite soundness, widths 1-4", check::rewrite_soundness, 60);
  exhaustive(2, "translation homomorphism, widths 1-4",
             check::translation_homomorphism, 60);
  exhaustive(3, "lemma validity, widths 1-4", check::lemma_validity, 120);
  exhaustive(4, "full-expansion completeness, widths 1-4",
             check::expansion_completeness, 120);

  fs::path dir = fs::temp_directory_path() /
                 ("intblast-acceptance-" + std::to_string(getpid()));
  fs::create_directories(dir);

  if (!have_z3()) {
    for (int id = 5; id <= 10; ++id)
      report(id, "needs an external solver", false, "z3 not found",
             Clock::now());
    return 1;
  }

  // 5 and 8: integer backend only.
  auto start = Clock::now();
  std::vector<Case> cases = corpus_cases();
  std::size_t generated = cases.size() - [&] {
    std::size_t n = 0;
    for (const Case &c : cases)
      n += c.name.rfind("gen-", 0) != 0;
    return n;
  }();
  CorpusRun plain = run_corpus(cases, backend(false));
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  {
    bool ok = generated >= 500 && plain.agree == cases.size() && secs <= 600;
    std::string detail = std::to_string(plain.agree) + "/" +
                         std::to_string(cases.size()) + " agree (" +
                         std::to_string(generated) + " generated, " +
                         std::to_string(cases.size() - generated) + " crafted)";
    if (!plain.mismatches.empty())
      detail += "; " + first_few(plain.mismatches);
    report(5, "oracle agreement", ok, detail, start);
  }

  // 6 and 8: with the under-approximation.
  start = Clock::now();
  CorpusRun ua = run_corpus(cases, backend(true));
  {
    bool same = ua.verdicts == plain.verdicts && ua.agree == cases.size();
    bool ok = same && ua.underapprox_calls >= 1 && ua.underapprox_sat >= 1;
    std::string detail = std::string(same ? "identical verdicts" : "verdicts differ") +
                         ", underapprox_calls=" + std::to_string(ua.underapprox_calls) +
                         ", sat from under-approximation=" +
                         std::to_string(ua.underapprox_sat);
    if (!ua.mismatches.empty())
      detail += "; " + first_few(ua.mismatches);
    report(6, "under-approximation path", ok, detail, start);
  }

  // 7: termination bound on the expansion-only family.
  start = Clock::now();
  {
    const unsigned E = 8;
    bool ok = true;
    std::string detail;
    for (const corpus::Crafted &c : corpus::crafted_families()) {
      if (c.family != "e")
        continue;
      Config cfg = backend(false);
      cfg.escalation_threshold = E;
      SolveResult r = solve(c.script, cfg);
      std::size_t bound = r.stats.abstracted_apps * (E + 2) + 1;
      bool fine = r.verdict != Verdict::Unknown && r.stats.iterations <= bound;
      ok &= fine;
      detail += (detail.empty() ? "" : ", ") + c.name + " " +
                std::to_string(r.stats.iterations) + "<=" + std::to_string(bound);
    }
    report(7, "termination bound (E=8)", ok, detail, start);
  }

  start = Clock::now();
  {
    std::vector<std::string> repeats = plain.repeated_models;
    repeats.insert(repeats.end(), ua.repeated_models.begin(),
                   ua.repeated_models.end());
    std::string detail = std::to_string(plain.models_seen + ua.models_seen) +
                         " models observed, " + std::to_string(repeats.size()) +
                         " consecutive repeats";
    if (!repeats.empty())
      detail += "; " + first_few(repeats);
    report(8, "progress", repeats.empty(), detail, start);
  }

  // 9: CLI determinism.
  start = Clock::now();
  {
    bool ok = true;
    std::size_t files = 0;
    std::string detail;
    std::vector<std::pair<std::string, Script>> picks;
    for (const corpus::Crafted &c : corpus::crafted_families())
      picks.emplace_back(c.name, c.script);
    for (std::size_t i = 0; i < cases.size() && i < 40; i += 4)
      picks.emplace_back(cases[i].name, cases[i].script);
    for (const auto &[name, script] : picks) {
      fs::path f = dir / (name + ".smt2");
      std::ofstream(f) << corpus::script_text(script);
      std::string args = "--get-model --stats " + solver_flags() + " '" +
                         f.string() + "'";
      CliRun a = cli(args, dir), b = cli(args, dir);
      ++files;
      auto lemmas = [](const std::string &err) {
        try {
          return nlohmann::json::parse(err.substr(0, err.find('\n')))["lemmas"];
        } catch (const std::exception &) {
          return nlohmann::json();
        }
      };
      if (a.out != b.out || a.out.empty() || lemmas(a.err).is_null() ||
          lemmas(a.err) != lemmas(b.err)) {
        ok = false;
        detail += name + " differs; ";
      }
    }
    report(9, "CLI determinism", ok,
           detail + std::to_string(files) + " files run twice", start);
  }

  // 10: print/reparse and translation dumps.
  start = Clock::now();
  {
    std::size_t terms = 0, survived = 0;
    std::vector<std::string> bad;
    for (std::uint64_t seed = 100; terms < 1000; ++seed) {
      corpus::GeneratorSpec spec;
      spec.seed = seed;
      spec.num_vars = 1 + seed % 3;
      spec.max_depth = 1 + seed % 4;
      spec.count = 50;
      for (const Script &s : corpus::generate(spec)) {
        if (terms == 1000)
          break;
        ++terms;
        SymbolTable st;
        for (const Declaration &d : s.declarations)
          st.add(d.var());
        Term t = s.formula();
        try {
          if (parse_term(to_smtlib(t), st) == t) {
            ++survived;
            continue;
          }
        } catch (const std::exception &e) {
          bad.push_back(e.what());
        }
        bad.push_back(to_smtlib(t));
      }
    }
    std::size_t dumps = 0, dumps_ok = 0;
    for (std::size_t i = 0; i < cases.size(); i += 10) {
      fs::path f = dir / "roundtrip.smt2", tr = dir / "roundtrip.tr.smt2";
      std::ofstream(f) << corpus::script_text(cases[i].script);
      CliRun first = cli(solver_flags() + " --dump-translation '" +
                             tr.string() + "' '" + f.string() + "'",
                         dir);
      CliRun second = cli(solver_flags() + " '" + tr.string() + "'", dir);
      ++dumps;
      if (first.out == second.out && first.code == 0 && second.code == 0)
        ++dumps_ok;
      else
        bad.push_back(cases[i].name + " dump re-solves to " + second.out);
    }
    bool ok = survived == 1000 && dumps_ok == dumps;
    std::string detail = std::to_string(survived) + "/1000 terms reparse equal, " +
                         std::to_string(dumps_ok) + "/" + std::to_string(dumps) +
                         " translation dumps re-solve to the same verdict";
    if (!bad.empty())
      detail += "; " + first_few(bad);
    report(10, "wire round-trip", ok, detail, start);
  }

  fs::remove_all(dir);
  return failures == 0 ? 0 : 1;
}
