#pragma once

#include "intblast/frontend.hpp"
#include "intblast/lemmas.hpp"
#include "intblast/solver_client.hpp"
#include "intblast/translate.hpp"
#include "intblast/value.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace intblast {

struct Config {
  SolverCommand nia_solver;
  std::optional<SolverCommand> bv_solver;
  bool underapprox_enabled = true;
  /// Instance lemmas per application before its full expansion.
  unsigned escalation_threshold = 8;
  unsigned max_iterations = 10000;
  std::optional<std::uint64_t> timeout_ms;
  bool expand_on_unknown = false;
  bool underapprox_after_refine = false;

  /// Throws std::invalid_argument on out-of-range settings.
  void validate() const;
};

/// A model of the translated formula: integer (or Bool) values of the
/// translated variables and a value for every abstracted application.
struct Model {
  /// Keyed by translated variable name.
  Assignment vars;
  /// Indexed like TranslationMap::apps().
  std::vector<Integer> apps;
  /// Values of other UF applications known to the caller.
  std::unordered_map<Term, Integer, TermHash> extra_apps;

  friend bool operator==(const Model &a, const Model &b) {
    return a.vars == b.vars && a.apps == b.apps;
  }
};

/// Interprets UF applications by their values in `mu`.
FunctionInterp model_interp(const Model &mu, const TranslationMap &tm);

/// Argument values of application `app` under `mu`.
std::pair<Integer, Integer> app_arguments(const Model &mu,
                                          const TranslationMap &tm,
                                          std::size_t app);

/// Indices of the applications whose value in `mu` differs from the true
/// bit-vector function of their arguments. Throws IncompleteModelError.
std::vector<std::size_t> check_spurious(const Model &mu,
                                        const TranslationMap &tm);

/// Per-application refinement progress.
struct AppRefinement {
  bool base_done = false;
  unsigned instances = 0;
  bool expanded = false;
};

/// Lemmas for the inconsistent applications, escalating base → instance →
/// full expansion. Every refined application gets at least one lemma that
/// `mu` falsifies. Throws InternalError for an already expanded app.
std::vector<Lemma> refine(const std::vector<std::size_t> &inconsistent,
                          const Model &mu, std::vector<AppRefinement> &history,
                          const TranslationMap &tm, unsigned threshold);

/// Names of variables occurring anywhere inside an argument of bvand,
/// bvshl or bvlshr in a preprocessed formula.
std::set<std::string> vars_under_abstracted_ops(const Term &preprocessed);

/// The under-approximation assumptions `x = ToBV(mu[x′])` for every
/// variable of `preprocessed` outside abstracted operators.
std::vector<CoreAssumption> underapprox_assumptions(const Term &preprocessed,
                                                    const Model &mu,
                                                    const TranslationMap &tm);

struct UnderApproxOutcome {
  CheckResult result = CheckResult::Unknown;
  /// Bit-vector values of the formula's variables when sat.
  Assignment model;
  /// The assumptions found in the unsat core when unsat.
  std::vector<CoreAssumption> core;
};

/// Solves the original bit-vector formula with an external QF_BV solver
/// under assumptions pinning variables to the integer model's values.
class UnderApproximator {
public:
  /// Starts the solver and asserts `preprocessed` once. Throws BackendError
  /// if the solver lacks `:produce-unsat-assumptions`.
  UnderApproximator(const SolverCommand &command, Term preprocessed,
                    std::set<std::string> reserved_names);

  /// False when there is nothing to pin (every variable sits under an
  /// abstracted operator); the check would just re-solve the formula.
  bool has_candidates(const Model &mu, const TranslationMap &tm) const;

  UnderApproxOutcome check(const Model &mu, const TranslationMap &tm,
                           Deadline deadline);

  SolverSession &session() { return session_; }

private:
  SolverSession session_;
  Term formula_;
  std::vector<Term> formula_vars_;
  std::set<std::string> reserved_;
  unsigned round_ = 0;
};

enum class Verdict { Sat, Unsat, Unknown };
std::string_view verdict_name(Verdict v);

/// Which branch produced a sat answer.
enum class SatSource { None, Abstraction, UnderApprox, Integer };

struct SolveStats {
  unsigned iterations = 0;
  std::size_t base_lemmas = 0;
  std::size_t instance_lemmas = 0;
  std::size_t expansion_lemmas = 0;
  std::size_t core_lemmas = 0;
  unsigned underapprox_calls = 0;
  unsigned underapprox_sat = 0;
  std::uint64_t time_ms = 0;
  std::size_t abstracted_apps = 0;

  /// Single-line JSON object.
  std::string to_json(Verdict verdict) const;
};

struct SolveResult {
  Verdict verdict = Verdict::Unknown;
  /// Bit-vector model over the declared constants (sat only).
  std::optional<Assignment> model;
  SolveStats stats;
  SatSource sat_source = SatSource::None;
  /// Why the verdict is unknown, if there is a reason to report.
  std::string diagnostic;
  bool backend_error = false;
};

struct SolveHooks {
  /// Called with every integer model the backend produces.
  std::function<void(unsigned iteration, const Model &)> on_model;
  /// Called with every lemma as it is asserted.
  std::function<void(const Lemma &)> on_lemma;
  /// Receives every command sent to either solver.
  std::ostream *solver_trace = nullptr;
};

/// Values for every declared constant: those in `values`, zero/false for
/// the rest.
Assignment complete_model(const std::vector<Declaration> &decls,
                          const Assignment &values);

/// A QF_UFNIA script declaring the lemmas' symbols and asserting each lemma
/// under a `; tier=<name> source=<app|global>` comment.
void print_lemmas(std::ostream &os, const std::vector<Lemma> &lemmas);

/// The preprocessed formula as a QF_BV script.
void print_preprocessed(std::ostream &os, const Script &script);

/// The QF_UFNIA translation with range axioms and the full expansion of
/// every abstracted application, so the dump is equisatisfiable with the
/// input. Integer scripts are printed unchanged.
void print_translation(std::ostream &os, const Script &script);

/// Decides the script's formula. Scripts that declare Int constants or
/// functions are passed to the integer solver unchanged.
SolveResult solve(const Script &script, const Config &config,
                  const SolveHooks &hooks = {});

} // namespace intblast
