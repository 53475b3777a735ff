#include "intblast/cegar.hpp"

#include "intblast/errors.hpp"
#include "intblast/oracle.hpp"
#include "intblast/preprocess.hpp"
#include "intblast/printer.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iostream>
#include <stdexcept>

namespace intblast {

void Config::validate() const {
  if (escalation_threshold < 1)
    throw std::invalid_argument("escalation threshold must be at least 1");
  if (max_iterations < 1)
    throw std::invalid_argument("max iterations must be at least 1");
  if (nia_solver.empty())
    throw std::invalid_argument("no integer solver configured");
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Sat:
    return "sat";
  case Verdict::Unsat:
    return "unsat";
  case Verdict::Unknown:
    return "unknown";
  }
  return {};
}

std::string SolveStats::to_json(Verdict verdict) const {
  nlohmann::ordered_json j;
  j["iterations"] = iterations;
  j["lemmas"] = {{"base", base_lemmas},
                 {"instance", instance_lemmas},
                 {"expansion", expansion_lemmas},
                 {"core", core_lemmas}};
  j["underapprox_calls"] = underapprox_calls;
  j["underapprox_sat"] = underapprox_sat;
  j["verdict"] = std::string(verdict_name(verdict));
  j["time_ms"] = time_ms;
  return j.dump();
}

FunctionInterp model_interp(const Model &mu, const TranslationMap &tm) {
  return [&mu, &tm](const Term &app, const std::vector<Integer> &) {
    if (auto id = tm.find_app(app); id && *id < mu.apps.size())
      return mu.apps[*id];
    auto extra = mu.extra_apps.find(app);
    if (extra != mu.extra_apps.end())
      return extra->second;
    throw IncompleteModelError("model has no value for " + to_smtlib(app));
  };
}

std::pair<Integer, Integer> app_arguments(const Model &mu,
                                          const TranslationMap &tm,
                                          std::size_t app) {
  const AbstractedApp &a = tm.apps().at(app);
  FunctionInterp interp = model_interp(mu, tm);
  return {eval_arith(a.lhs, mu.vars, interp).num,
          eval_arith(a.rhs, mu.vars, interp).num};
}

std::vector<std::size_t> check_spurious(const Model &mu,
                                        const TranslationMap &tm) {
  if (mu.apps.size() != tm.apps().size())
    throw IncompleteModelError("model does not cover every abstracted "
                               "application");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tm.apps().size(); ++i) {
    const AbstractedApp &a = tm.apps()[i];
    auto [x, y] = app_arguments(mu, tm, i);
    if (mu.apps[i] != apply_abstract_op(a.op, a.width, x, y))
      out.push_back(i);
  }
  return out;
}

namespace {

// Whether `mu` makes the lemma false. Lemmas mentioning applications the
// model does not cover count as not falsified.
bool falsified_by(const Lemma &lemma, const Model &mu,
                  const TranslationMap &tm) {
  try {
    return !eval_arith(lemma.formula, mu.vars, model_interp(mu, tm)).as_bool();
  } catch (const IncompleteModelError &) {
    return false;
  }
}

} // namespace

std::vector<Lemma> refine(const std::vector<std::size_t> &inconsistent,
                          const Model &mu, std::vector<AppRefinement> &history,
                          const TranslationMap &tm, unsigned threshold) {
  if (history.size() < tm.apps().size())
    history.resize(tm.apps().size());
  std::vector<Lemma> out;
  for (std::size_t app : inconsistent) {
    AppRefinement &h = history.at(app);
    if (h.expanded)
      throw InternalError("fully expanded application " + std::to_string(app) +
                          " is inconsistent in the backend model");
    if (!h.base_done) {
      h.base_done = true;
      std::vector<Lemma> batch = base_lemmas(tm, app);
      bool progress = std::any_of(batch.begin(), batch.end(), [&](const Lemma &l) {
        return falsified_by(l, mu, tm);
      });
      out.insert(out.end(), batch.begin(), batch.end());
      if (progress)
        continue;
    }
    if (h.instances < threshold) {
      auto [x, y] = app_arguments(mu, tm, app);
      out.push_back(instance_lemma(tm, app, x, y));
      ++h.instances;
    } else {
      out.push_back(full_expansion(tm, app));
      h.expanded = true;
    }
  }
  return out;
}

std::set<std::string> vars_under_abstracted_ops(const Term &preprocessed) {
  std::set<std::string> out;
  for (const Term &t : post_order(preprocessed)) {
    if (t.kind() != Kind::BvAnd && t.kind() != Kind::BvShl &&
        t.kind() != Kind::BvLshr)
      continue;
    for (const Term &v : oracle::free_variables(t))
      out.insert(v.name());
  }
  return out;
}

std::vector<CoreAssumption> underapprox_assumptions(const Term &preprocessed,
                                                    const Model &mu,
                                                    const TranslationMap &tm) {
  std::set<std::string> excluded = vars_under_abstracted_ops(preprocessed);
  std::vector<CoreAssumption> out;
  for (const Term &v : oracle::free_variables(preprocessed)) {
    if (excluded.count(v.name()))
      continue;
    const TranslatedVar *tv = tm.find_var(v.name());
    if (!tv)
      throw InternalError("variable '" + v.name() + "' was not translated");
    auto it = mu.vars.find(tv->translated.name());
    if (it == mu.vars.end())
      throw IncompleteModelError("model has no value for '" +
                                 tv->translated.name() + "'");
    if (tv->width > 0)
      to_bv(it->second.num, tv->width); // range check
    out.push_back({v.name(), it->second.num, tv->width});
  }
  return out;
}

UnderApproximator::UnderApproximator(const SolverCommand &command,
                                     Term preprocessed,
                                     std::set<std::string> reserved_names)
    : session_(command, "QF_BV", true), formula_(std::move(preprocessed)),
      formula_vars_(oracle::free_variables(formula_)),
      reserved_(std::move(reserved_names)) {
  session_.assert_term(formula_);
}

bool UnderApproximator::has_candidates(const Model &mu,
                                       const TranslationMap &tm) const {
  return !underapprox_assumptions(formula_, mu, tm).empty();
}

UnderApproxOutcome UnderApproximator::check(const Model &mu,
                                            const TranslationMap &tm,
                                            Deadline deadline) {
  std::vector<CoreAssumption> assumptions =
      underapprox_assumptions(formula_, mu, tm);
  ++round_;
  std::vector<std::pair<std::string, Term>> guarded;
  std::unordered_map<std::string, std::size_t> by_name;
  for (std::size_t i = 0; i < assumptions.size(); ++i) {
    const CoreAssumption &a = assumptions[i];
    std::string name = "ua!" + std::to_string(round_) + "!" + std::to_string(i);
    while (reserved_.count(name))
      name += "!";
    Term var = a.width == 0 ? mk_var(a.var, Sort::boolean())
                            : mk_var(a.var, Sort::bitvec(a.width));
    Term value = a.width == 0 ? mk_bool(a.value != 0) : to_bv(a.value, a.width);
    guarded.emplace_back(name, mk_eq(var, value));
    by_name.emplace(name, i);
  }

  UnderApproxOutcome out;
  AssumptionCheck r = session_.check_assuming(guarded, deadline);
  out.result = r.result;
  if (r.result == CheckResult::Sat) {
    std::vector<Value> values = session_.get_values(formula_vars_);
    for (std::size_t i = 0; i < formula_vars_.size(); ++i)
      out.model[formula_vars_[i].name()] = values[i];
  } else if (r.result == CheckResult::Unsat) {
    for (const std::string &n : r.core)
      out.core.push_back(assumptions[by_name.at(n)]);
    // Without a usable core every assumption is negated.
    if (out.core.empty())
      out.core = assumptions;
  }
  return out;
}

namespace {

std::uint64_t elapsed_ms(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
          .count());
}

class CegarLoop {
public:
  CegarLoop(const Script &script, const Config &cfg, const SolveHooks &hooks)
      : script_(script), cfg_(cfg), hooks_(hooks), start_(Clock::now()) {
    if (cfg.timeout_ms)
      deadline_ = start_ + std::chrono::milliseconds(*cfg.timeout_ms);
  }

  SolveResult run() {
    try {
      if (script_.is_integer_problem())
        solve_integer();
      else
        solve_bitvector();
    } catch (const BackendError &e) {
      result_.verdict = Verdict::Unknown;
      result_.model.reset();
      result_.backend_error = true;
      result_.diagnostic = e.what();
    } catch (const Error &e) {
      result_.verdict = Verdict::Unknown;
      result_.model.reset();
      result_.diagnostic = e.what();
    }
    result_.stats.time_ms = elapsed_ms(start_);
    return result_;
  }

private:
  bool out_of_time() const { return deadline_ && Clock::now() >= *deadline_; }

  void finish_unknown(std::string why) {
    result_.verdict = Verdict::Unknown;
    result_.diagnostic = std::move(why);
  }

  void solve_integer() {
    SolverSession nia(cfg_.nia_solver,
                      script_.logic.empty() ? "QF_UFNIA" : script_.logic);
    nia.set_trace(hooks_.solver_trace);
    for (const Term &a : script_.assertions)
      nia.assert_term(a);
    ++result_.stats.iterations;
    CheckResult r = nia.check(deadline_);
    if (r == CheckResult::Unsat) {
      result_.verdict = Verdict::Unsat;
      return;
    }
    if (r == CheckResult::Unknown) {
      finish_unknown(out_of_time() ? "timeout" : "integer solver returned unknown");
      return;
    }
    std::vector<Term> consts;
    SymbolTable used;
    for (const Term &a : script_.assertions)
      used.add_symbols_of(a);
    for (const Declaration &d : script_.declarations)
      if (!d.is_function() && used.constants.count(d.name))
        consts.push_back(d.var());
    std::vector<Value> values = nia.get_values(consts);
    Assignment model;
    for (std::size_t i = 0; i < consts.size(); ++i)
      model[consts[i].name()] = values[i];
    result_.verdict = Verdict::Sat;
    result_.sat_source = SatSource::Integer;
    result_.model = std::move(model);
  }

  Model fetch_model(SolverSession &nia) {
    std::vector<Term> terms;
    for (const TranslatedVar &v : tm_.vars())
      terms.push_back(v.translated);
    for (const AbstractedApp &a : tm_.apps())
      terms.push_back(a.app_term);
    std::vector<Value> values = nia.get_values(terms);
    for (const Value &v : values)
      if (v.type == Value::Type::Int && v.num < 0)
        throw BackendError("integer solver violated the range axioms");
    Model mu;
    std::size_t i = 0;
    for (const TranslatedVar &v : tm_.vars())
      mu.vars[v.translated.name()] = values[i++];
    for (std::size_t a = 0; a < tm_.apps().size(); ++a)
      mu.apps.push_back(values[i++].num);
    return mu;
  }

  void assert_lemma(SolverSession &nia, const Lemma &l) {
    nia.assert_term(l.formula);
    switch (l.tier) {
    case LemmaTier::Base:
      ++result_.stats.base_lemmas;
      break;
    case LemmaTier::Instance:
      ++result_.stats.instance_lemmas;
      break;
    case LemmaTier::FullExpansion:
      ++result_.stats.expansion_lemmas;
      break;
    case LemmaTier::UnderApproxCore:
      ++result_.stats.core_lemmas;
      break;
    }
    if (hooks_.on_lemma)
      hooks_.on_lemma(l);
  }

  bool accept_model(const Assignment &bv_values, SatSource source) {
    Assignment model = complete_model(script_.declarations, bv_values);
    if (!oracle::eval(phi_, model).as_bool())
      return false;
    result_.verdict = Verdict::Sat;
    result_.sat_source = source;
    result_.model = std::move(model);
    return true;
  }

  // Returns true once the verdict is decided.
  bool run_underapprox(SolverSession &nia, const Model &mu) {
    if (!underapprox_)
      return false;
    if (!underapprox_->has_candidates(mu, tm_))
      return false;
    ++result_.stats.underapprox_calls;
    UnderApproxOutcome out;
    try {
      out = underapprox_->check(mu, tm_, deadline_);
    } catch (const BackendError &e) {
      std::cerr << "intblast: under-approximation disabled: " << e.what() << '\n';
      underapprox_.reset();
      return false;
    }
    if (out.result == CheckResult::Sat) {
      if (accept_model(out.model, SatSource::UnderApprox)) {
        ++result_.stats.underapprox_sat;
        return true;
      }
      std::cerr << "intblast: under-approximation model failed verification\n";
    } else if (out.result == CheckResult::Unsat) {
      assert_lemma(nia, core_lemma(out.core, tm_));
    }
    return false;
  }

  void start_underapprox() {
    if (!cfg_.underapprox_enabled || !cfg_.bv_solver || cfg_.bv_solver->empty())
      return;
    std::set<std::string> reserved;
    for (const Declaration &d : script_.declarations)
      reserved.insert(d.name);
    try {
      underapprox_.emplace(*cfg_.bv_solver, preprocessed_, std::move(reserved));
      underapprox_->session().set_trace(hooks_.solver_trace);
    } catch (const BackendError &e) {
      std::cerr << "intblast: under-approximation disabled: " << e.what() << '\n';
      underapprox_.reset();
    }
  }

  void solve_bitvector() {
    phi_ = script_.formula();
    preprocessed_ = eliminate_derived_ops(phi_);
    Translation tr = translate_formula(preprocessed_, script_.declarations);
    tm_ = std::move(tr.map);
    result_.stats.abstracted_apps = tm_.apps().size();

    SolverSession nia(cfg_.nia_solver, "QF_UFNIA");
    nia.set_trace(hooks_.solver_trace);
    for (const TranslatedVar &v : tm_.vars())
      nia.declare_symbols(v.translated);
    for (const Term &r : tm_.range_constraints())
      nia.assert_term(r);
    nia.assert_term(tr.formula);

    std::vector<AppRefinement> history(tm_.apps().size());
    bool retried_unknown = false;

    for (;;) {
      if (result_.stats.iterations >= cfg_.max_iterations)
        return finish_unknown("iteration limit reached");
      if (out_of_time())
        return finish_unknown("timeout");
      ++result_.stats.iterations;

      CheckResult r = nia.check(deadline_);
      if (r == CheckResult::Unsat) {
        result_.verdict = Verdict::Unsat;
        return;
      }
      if (r == CheckResult::Unknown) {
        if (nia.state() == SolverSession::State::Dead || out_of_time())
          return finish_unknown("timeout");
        if (cfg_.expand_on_unknown && !retried_unknown) {
          retried_unknown = true;
          for (std::size_t a = 0; a < tm_.apps().size(); ++a) {
            if (history[a].expanded)
              continue;
            history[a].expanded = true;
            assert_lemma(nia, full_expansion(tm_, a));
          }
          continue;
        }
        return finish_unknown("integer solver returned unknown");
      }

      Model mu = fetch_model(nia);
      if (hooks_.on_model)
        hooks_.on_model(result_.stats.iterations, mu);

      std::vector<std::size_t> bad = check_spurious(mu, tm_);
      if (bad.empty()) {
        Assignment bv;
        for (const TranslatedVar &v : tm_.vars()) {
          const Value &val = mu.vars.at(v.translated.name());
          bv[v.original.name()] =
              v.width == 0 ? val
                           : Value::bitvec(to_bv(val.num, v.width).value(), v.width);
        }
        if (accept_model(bv, SatSource::Abstraction))
          return;
        throw InternalError("consistent integer model does not satisfy the "
                            "bit-vector formula");
      }

      if (!underapprox_started_) {
        underapprox_started_ = true;
        start_underapprox();
      }
      if (!cfg_.underapprox_after_refine && run_underapprox(nia, mu))
        return;
      for (const Lemma &l : refine(bad, mu, history, tm_,
                                   cfg_.escalation_threshold))
        assert_lemma(nia, l);
      if (cfg_.underapprox_after_refine && run_underapprox(nia, mu))
        return;
    }
  }

  const Script &script_;
  const Config &cfg_;
  const SolveHooks &hooks_;
  Clock::time_point start_;
  Deadline deadline_;
  SolveResult result_;
  Term phi_;
  Term preprocessed_;
  TranslationMap tm_;
  std::optional<UnderApproximator> underapprox_;
  bool underapprox_started_ = false;
};

} // namespace

Assignment complete_model(const std::vector<Declaration> &decls,
                          const Assignment &values) {
  Assignment out;
  for (const Declaration &d : decls) {
    if (d.is_function())
      continue;
    auto it = values.find(d.name);
    if (it != values.end())
      out[d.name] = it->second;
    else if (d.sort.is_bool())
      out[d.name] = Value::boolean(false);
    else if (d.sort.is_bitvec())
      out[d.name] = Value::bitvec(0, d.sort.width());
    else
      out[d.name] = Value::integer(0);
  }
  return out;
}

void print_lemmas(std::ostream &os, const std::vector<Lemma> &lemmas) {
  os << "(set-logic QF_UFNIA)\n";
  std::set<std::string> declared;
  for (const Lemma &l : lemmas) {
    for (const Term &t : post_order(l.formula)) {
      if ((t.kind() != Kind::Var && t.kind() != Kind::Apply) ||
          !declared.insert(t.name()).second)
        continue;
      std::vector<Sort> params;
      for (const Term &c : t.children())
        params.push_back(c.sort());
      os << declaration_text(t.name(), params, t.sort()) << '\n';
    }
  }
  for (const Lemma &l : lemmas)
    os << "; tier=" << tier_name(l.tier) << " source="
       << (l.source ? std::to_string(*l.source) : "global") << '\n'
       << "(assert " << to_smtlib(l.formula) << ")\n";
}

void print_preprocessed(std::ostream &os, const Script &script) {
  Script s = expand_defines(script);
  print_script(os, "QF_BV", {eliminate_derived_ops(s.formula())});
}

void print_translation(std::ostream &os, const Script &script) {
  Script s = expand_defines(script);
  if (s.is_integer_problem()) {
    print_script(os, s);
    return;
  }
  Translation tr =
      translate_formula(eliminate_derived_ops(s.formula()), s.declarations);
  std::vector<Term> assertions = tr.map.range_constraints();
  assertions.push_back(tr.formula);
  for (std::size_t a = 0; a < tr.map.apps().size(); ++a)
    assertions.push_back(full_expansion(tr.map, a).formula);
  print_script(os, "QF_UFNIA", assertions);
}

SolveResult solve(const Script &script, const Config &config,
                  const SolveHooks &hooks) {
  config.validate();
  Script expanded = expand_defines(script);
  return CegarLoop(expanded, config, hooks).run();
}

} // namespace intblast
