#include "intblast/corpus.hpp"

#include "intblast/errors.hpp"
#include "intblast/oracle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace intblast::corpus {

namespace {

const std::vector<Kind> kBinaryOps = {
    Kind::BvAdd,  Kind::BvSub,  Kind::BvMul,  Kind::BvUdiv, Kind::BvUrem,
    Kind::BvSdiv, Kind::BvSrem, Kind::BvSmod, Kind::BvAnd,  Kind::BvOr,
    Kind::BvXor,  Kind::BvNand, Kind::BvNor,  Kind::BvXnor, Kind::BvShl,
    Kind::BvLshr, Kind::BvAshr};
const std::vector<Kind> kUnaryOps = {Kind::BvNot, Kind::BvNeg};
const std::vector<Kind> kStructuralOps = {
    Kind::Concat,     Kind::Extract,     Kind::ZeroExtend, Kind::SignExtend,
    Kind::RotateLeft, Kind::RotateRight, Kind::Repeat,     Kind::BvComp,
    Kind::Ite};
const std::vector<Kind> kPredicates = {
    Kind::Equal, Kind::Distinct, Kind::BvUlt, Kind::BvUle, Kind::BvUgt,
    Kind::BvUge, Kind::BvSlt,    Kind::BvSle, Kind::BvSgt, Kind::BvSge};
const std::vector<Kind> kConnectives = {Kind::Not, Kind::And, Kind::Or,
                                        Kind::Xor, Kind::Implies, Kind::Ite,
                                        Kind::Equal};

class Generator {
public:
  Generator(const GeneratorSpec &spec, std::uint64_t seed)
      : spec_(spec), rng_(seed) {}

  Script next() {
    vars_.clear();
    for (unsigned i = 0; i < spec_.num_vars; ++i) {
      unsigned w = spec_.widths[below(spec_.widths.size())];
      vars_.push_back(mk_var(std::string(1, char('x' + i)), Sort::bitvec(w)));
    }
    Term phi = formula(spec_.max_depth);
    Script s;
    s.logic = "QF_BV";
    for (const Term &v : vars_)
      s.declarations.push_back({v.name(), v.sort(), {}});
    s.assertions.push_back(phi);
    s.has_check_sat = true;
    return s;
  }

private:
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool chance(unsigned percent) { return below(100) < percent; }

  template <class T> const T &pick(const std::vector<T> &xs) {
    return xs[below(xs.size())];
  }

  Term formula(unsigned depth) {
    if (depth <= 1 || chance(40))
      return atom(depth);
    Kind k = pick(kConnectives);
    switch (k) {
    case Kind::Not:
      return mk_not(formula(depth - 1));
    case Kind::Ite:
      return mk_ite(formula(depth - 1), formula(depth - 1), formula(depth - 1));
    default:
      return mk_term(k, {formula(depth - 1), formula(depth - 1)});
    }
  }

  Term atom(unsigned depth) {
    unsigned w = pick(spec_.widths);
    Kind k = pick(kPredicates);
    return mk_term(k, {bv(w, depth - 1, true), bv(w, depth - 1, true)});
  }

  Term leaf(unsigned w) {
    std::vector<Term> matching;
    for (const Term &v : vars_)
      if (v.sort().width() == w)
        matching.push_back(v);
    if (!matching.empty() && chance(75))
      return pick(matching);
    return mk_bv(below(std::uint64_t{1} << w), w);
  }

  // Operators with positive weight that can produce width `w`.
  std::vector<std::pair<Kind, unsigned>> candidates(unsigned w,
                                                    unsigned depth) const {
    std::vector<std::pair<Kind, unsigned>> out;
    for (auto [k, weight] : spec_.op_weights) {
      if (weight == 0)
        continue;
      bool ok = true;
      switch (k) {
      case Kind::Concat:
      case Kind::ZeroExtend:
      case Kind::SignExtend:
        ok = w >= 2;
        break;
      case Kind::Repeat:
        ok = w >= 2;
        break;
      case Kind::BvComp:
        ok = w == 1;
        break;
      case Kind::Ite:
        ok = depth >= 2; // the condition needs depth at least one
        break;
      default:
        break;
      }
      if (ok)
        out.emplace_back(k, weight);
    }
    return out;
  }

  Kind weighted(const std::vector<std::pair<Kind, unsigned>> &cands) {
    std::uint64_t total = 0;
    for (auto &c : cands)
      total += c.second;
    std::uint64_t r = below(total);
    for (auto &c : cands) {
      if (r < c.second)
        return c.first;
      r -= c.second;
    }
    return cands.back().first;
  }

  // A source width in 1..4 for extract and friends, preferring the
  // configured widths.
  unsigned source_width(unsigned lo, unsigned hi) {
    std::vector<unsigned> ws;
    for (unsigned w : spec_.widths)
      if (w >= lo && w <= hi)
        ws.push_back(w);
    if (ws.empty())
      for (unsigned w = lo; w <= hi; ++w)
        ws.push_back(w);
    return pick(ws);
  }

  Term bv(unsigned w, unsigned depth, bool force_op) {
    if (depth == 0 || (!force_op && chance(30)))
      return leaf(w);
    auto cands = candidates(w, depth);
    if (cands.empty())
      return leaf(w);
    Kind k = weighted(cands);
    unsigned d = depth - 1;
    if (std::find(kBinaryOps.begin(), kBinaryOps.end(), k) != kBinaryOps.end())
      return mk_term(k, {bv(w, d, false), bv(w, d, false)});
    if (std::find(kUnaryOps.begin(), kUnaryOps.end(), k) != kUnaryOps.end())
      return mk_term(k, {bv(w, d, false)});
    switch (k) {
    case Kind::Concat: {
      unsigned hi = 1 + static_cast<unsigned>(below(w - 1));
      return mk_term(k, {bv(hi, d, false), bv(w - hi, d, false)});
    }
    case Kind::Extract: {
      unsigned s = source_width(w, 4);
      unsigned lo = static_cast<unsigned>(below(s - w + 1));
      return mk_term(k, {bv(s, d, false)}, {lo + w - 1, lo});
    }
    case Kind::ZeroExtend:
    case Kind::SignExtend: {
      unsigned s = source_width(1, w - 1);
      return mk_term(k, {bv(s, d, false)}, {w - s});
    }
    case Kind::RotateLeft:
    case Kind::RotateRight:
      return mk_term(k, {bv(w, d, false)},
                     {static_cast<unsigned>(below(w + 1))});
    case Kind::Repeat: {
      std::vector<unsigned> divisors;
      for (unsigned n = 2; n <= w; ++n)
        if (w % n == 0)
          divisors.push_back(n);
      unsigned n = pick(divisors);
      return mk_term(k, {bv(w / n, d, false)}, {n});
    }
    case Kind::BvComp: {
      unsigned s = source_width(1, 4);
      return mk_term(k, {bv(s, d, false), bv(s, d, false)});
    }
    case Kind::Ite:
      return mk_ite(formula(d),
                    bv(w, d, false), bv(w, d, false));
    default:
      throw std::invalid_argument("generator cannot produce operator " +
                                  std::string(kind_symbol(k)));
    }
  }

  const GeneratorSpec &spec_;
  std::mt19937_64 rng_;
  std::vector<Term> vars_;
};

bool is_generator_op(Kind k) {
  auto in = [k](const std::vector<Kind> &xs) {
    return std::find(xs.begin(), xs.end(), k) != xs.end();
  };
  return in(kBinaryOps) || in(kUnaryOps) || in(kStructuralOps);
}

} // namespace

std::map<Kind, unsigned> GeneratorSpec::default_weights() {
  std::map<Kind, unsigned> w;
  for (Kind k : kBinaryOps)
    w[k] = 2;
  for (Kind k : kUnaryOps)
    w[k] = 2;
  for (Kind k : kStructuralOps)
    w[k] = 1;
  // The abstracted operators are the interesting ones.
  w[Kind::BvAnd] = 5;
  w[Kind::BvShl] = 4;
  w[Kind::BvLshr] = 4;
  return w;
}

void GeneratorSpec::validate() const {
  if (num_vars < 1 || num_vars > 3)
    throw std::invalid_argument("num_vars must be in 1..3");
  if (widths.empty())
    throw std::invalid_argument("widths must not be empty");
  for (unsigned w : widths)
    if (w < 1 || w > 4)
      throw std::invalid_argument("widths must be in 1..4");
  if (max_depth < 1 || max_depth > 4)
    throw std::invalid_argument("max_depth must be in 1..4");
  unsigned total = 0;
  for (auto [k, weight] : op_weights) {
    if (!is_generator_op(k))
      throw std::invalid_argument("operator " + std::string(kind_symbol(k)) +
                                  " cannot be generated");
    total += weight;
  }
  if (total == 0)
    throw std::invalid_argument("operator weights are all zero");
}

std::vector<Script> generate(const GeneratorSpec &spec) {
  spec.validate();
  Generator g(spec, spec.seed);
  std::vector<Script> out;
  out.reserve(spec.count);
  for (unsigned i = 0; i < spec.count; ++i)
    out.push_back(g.next());
  return out;
}

namespace {

struct Recipe {
  const char *name;
  const char *family;
  bool sat;
  const char *text;
};

const Recipe kRecipes[] = {
    // (a) arithmetic only: no abstracted operators.
    {"a-mul-comm-16", "a", false,
     "(declare-const x (_ BitVec 16)) (declare-const y (_ BitVec 16))"
     "(assert (not (= (bvmul x y) (bvmul y x))))"},
    {"a-mul-comm-4", "a", false,
     "(declare-const x (_ BitVec 4)) (declare-const y (_ BitVec 4))"
     "(assert (not (= (bvmul x y) (bvmul y x))))"},
    {"a-add-sub-8", "a", false,
     "(declare-const x (_ BitVec 8)) (declare-const y (_ BitVec 8))"
     "(assert (not (= (bvsub (bvadd x y) y) x)))"},
    {"a-linear-32", "a", true,
     "(declare-const x (_ BitVec 32))"
     "(assert (= (bvadd (bvmul x #x00000003) #x00000007) #x00000019))"},
    {"a-udiv-8", "a", true,
     "(declare-const x (_ BitVec 8))"
     "(assert (and (= (bvudiv x #x03) #x05) (bvult x #x10)))"},
    {"a-concat-extract-8", "a", false,
     "(declare-const x (_ BitVec 8))"
     "(assert (not (= (concat ((_ extract 7 4) x) ((_ extract 3 0) x)) x)))"},
    {"a-overflow-16", "a", true,
     "(declare-const x (_ BitVec 16)) (declare-const y (_ BitVec 16))"
     "(assert (and (bvult (bvadd x y) x) (bvult #x0100 y) (bvult x #x1000)))"},
    {"a-sdiv-4", "a", true,
     "(declare-const x (_ BitVec 4))"
     "(assert (and (= (bvsdiv x #b0011) #b1110) (bvslt x #b0000)))"},

    // (b) bvand identities.
    {"b-idempotent-4", "b", false,
     "(declare-const x (_ BitVec 4)) (assert (not (= (bvand x x) x)))"},
    {"b-comm-4", "b", false,
     "(declare-const x (_ BitVec 4)) (declare-const y (_ BitVec 4))"
     "(assert (not (= (bvand x y) (bvand y x))))"},
    {"b-zero-4", "b", false,
     "(declare-const x (_ BitVec 4))"
     "(assert (not (= (bvand x #b0000) #b0000)))"},
    {"b-upper-bound-4", "b", false,
     "(declare-const x (_ BitVec 4)) (declare-const y (_ BitVec 4))"
     "(assert (bvugt (bvand x y) x))"},
    {"b-de-morgan-3", "b", false,
     "(declare-const x (_ BitVec 3)) (declare-const y (_ BitVec 3))"
     "(assert (not (= (bvor x y) (bvnot (bvand (bvnot x) (bvnot y))))))"},
    {"b-mask-8", "b", false,
     "(declare-const x (_ BitVec 8)) (assert (= (bvand x #xf0) #x0f))"},
    {"b-sat-4", "b", true,
     "(declare-const x (_ BitVec 4)) (declare-const y (_ BitVec 4))"
     "(assert (and (= (bvand x y) #b0101) (distinct x y)))"},
    {"b-sat-16", "b", true,
     "(declare-const x (_ BitVec 16)) (declare-const y (_ BitVec 16))"
     "(assert (and (= (bvand x y) #xbeef) (bvult x y)))"},

    // (c) shift ladders.
    {"c-shl-roundtrip-4", "c", true,
     "(declare-const x (_ BitVec 4)) (declare-const s (_ BitVec 4))"
     "(assert (and (= (bvshl x s) #b1000) (= (bvlshr (bvshl x s) s) #b0001)))"},
    {"c-shl-overflow-4", "c", false,
     "(declare-const x (_ BitVec 4))"
     "(assert (not (= (bvshl x #b0100) #b0000)))"},
    {"c-lshr-bound-4", "c", false,
     "(declare-const x (_ BitVec 4)) (declare-const s (_ BitVec 4))"
     "(assert (bvugt (bvlshr x s) x))"},
    {"c-shl-mul-4", "c", false,
     "(declare-const x (_ BitVec 4))"
     "(assert (not (= (bvshl x #b0001) (bvmul x #b0010))))"},
    {"c-double-shift-8", "c", true,
     "(declare-const x (_ BitVec 8)) (declare-const s (_ BitVec 8))"
     "(assert (and (= (bvshl (bvshl x s) s) #x40) (bvult s #x04)"
     " (bvult x #x02)))"},
    {"c-ladder-3", "c", true,
     "(declare-const x (_ BitVec 3)) (declare-const s (_ BitVec 3))"
     "(assert (and (= (bvlshr x s) #b011) (= (bvshl x s) #b100)))"},

    // (d) values of the unabstracted variables extend to a model.
    {"d-pinned-4", "d", true,
     "(declare-const x (_ BitVec 4)) (declare-const y (_ BitVec 4))"
     "(declare-const z (_ BitVec 4)) (declare-const w (_ BitVec 4))"
     "(assert (and (= (bvand x y) z) (bvugt z #b0011) (= w (bvadd z #b0001))))"},
    {"d-mask-add-4", "d", true,
     "(declare-const x (_ BitVec 4)) (declare-const y (_ BitVec 4))"
     "(assert (and (= (bvand x #b0110) (bvadd y #b0010)) (bvult y #b0011)))"},
    {"d-shift-sum-3", "d", true,
     "(declare-const x (_ BitVec 3)) (declare-const y (_ BitVec 3))"
     "(declare-const z (_ BitVec 3))"
     "(assert (and (= (bvshl x #b001) (bvadd y z)) (= y #b011)))"},
    {"d-mixed-unsat-4", "d", false,
     "(declare-const x (_ BitVec 4)) (declare-const y (_ BitVec 4))"
     "(assert (and (= y (bvand x #b0011)) (bvugt y #b0011)))"},

    // (e) bit-level constraints only the full expansion pins down.
    {"e-bits-3", "e", true,
     "(declare-const x (_ BitVec 3))"
     "(assert (and (= (bvand x #b101) #b100) (= (bvand x #b010) #b010)))"},
    {"e-bits-4", "e", true,
     "(declare-const x (_ BitVec 4))"
     "(assert (and (= (bvand x #b1001) #b1000) (= (bvand x #b0110) #b0100)"
     " (= (bvand x #b0011) #b0000)))"},
    {"e-bits-8", "e", true,
     "(declare-const x (_ BitVec 8)) (declare-const y (_ BitVec 8))"
     "(assert (and (= (bvand x y) #x81) (= (bvand x #x0f) #x03)"
     " (= (bvand y #xf0) #xc0)))"},
    {"e-bits-unsat-3", "e", false,
     "(declare-const x (_ BitVec 3))"
     "(assert (and (= (bvand x #b101) #b100) (= (bvand x #b011) #b001)))"},
};

} // namespace

std::vector<Crafted> crafted_families() {
  std::vector<Crafted> out;
  for (const Recipe &r : kRecipes) {
    std::string text = std::string("(set-logic QF_BV)") + r.text + "(check-sat)";
    out.push_back({r.name, r.family, parse_script(text), r.sat});
  }
  return out;
}

std::optional<bool> oracle_verdict(const Script &script, std::uint64_t budget) {
  try {
    return oracle::brute_force_sat(expand_defines(script).formula(), budget).sat;
  } catch (const BudgetExceeded &) {
    return std::nullopt;
  }
}

std::string script_text(const Script &script) {
  std::ostringstream os;
  print_script(os, script);
  return os.str();
}

std::vector<ManifestEntry> write_corpus(const std::filesystem::path &dir,
                                        const GeneratorSpec &spec) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "generated");
  fs::create_directories(dir / "crafted");
  std::vector<ManifestEntry> rows;

  auto emit = [&](const std::string &rel, const Script &s,
                  const std::string &family, std::optional<bool> expected) {
    std::ofstream f(dir / rel);
    if (!f)
      throw std::runtime_error("cannot write " + (dir / rel).string());
    f << script_text(s);
    rows.push_back({rel, family, oracle_verdict(s, oracle::kDefaultBudget),
                    expected});
  };

  std::vector<Script> gen = generate(spec);
  for (std::size_t i = 0; i < gen.size(); ++i) {
    std::ostringstream name;
    name << "generated/gen-" << std::setw(5) << std::setfill('0') << i
         << ".smt2";
    emit(name.str(), gen[i], "generated", std::nullopt);
  }
  for (const Crafted &c : crafted_families())
    emit("crafted/" + c.name + ".smt2", c.script, c.family, c.expected_sat);

  std::ofstream manifest(dir / "manifest.jsonl");
  auto verdict = [](std::optional<bool> v) -> nlohmann::json {
    if (!v)
      return nullptr;
    return *v ? "sat" : "unsat";
  };
  for (const ManifestEntry &r : rows) {
    nlohmann::ordered_json j;
    j["path"] = r.path;
    j["oracle"] = verdict(r.oracle);
    j["family"] = r.family;
    if (r.expected)
      j["expected"] = verdict(r.expected);
    manifest << j.dump() << '\n';
  }
  return rows;
}

} // namespace intblast::corpus
