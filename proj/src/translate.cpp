#include "intblast/translate.hpp"

#include "intblast/errors.hpp"
#include "intblast/oracle.hpp"
#include "intblast/preprocess.hpp"

namespace intblast {

namespace {

Term add(const Term &a, const Term &b) { return mk_term(Kind::IntAdd, {a, b}); }
Term sub(const Term &a, const Term &b) { return mk_term(Kind::IntSub, {a, b}); }
Term mul(const Term &a, const Term &b) { return mk_term(Kind::IntMul, {a, b}); }
Term idiv(const Term &a, const Term &b) { return mk_term(Kind::IntDiv, {a, b}); }
Term imod(const Term &a, const Term &b) { return mk_term(Kind::IntMod, {a, b}); }
Term le(const Term &a, const Term &b) { return mk_term(Kind::IntLe, {a, b}); }
Term ge(const Term &a, const Term &b) { return mk_term(Kind::IntGe, {a, b}); }
Term num(const Integer &v) { return mk_int(v); }

// Signed reading of a translated width-k value, inlined.
Term unsigned_to_signed(const Term &x, unsigned k) {
  return mk_ite(ge(x, num(pow2(k - 1))), sub(x, num(pow2(k))), x);
}

Term translate_node(const Term &t, const std::vector<Term> &c,
                    TranslationMap &tm) {
  const unsigned k = t.sort().is_bitvec() ? t.sort().width() : 0;
  switch (t.kind()) {
  case Kind::Const:
    return t.sort().is_bitvec() ? num(t.value()) : t;
  case Kind::Var:
    return tm.add_var(t).translated;

  case Kind::Not:
  case Kind::And:
  case Kind::Or:
  case Kind::Xor:
  case Kind::Implies:
  case Kind::Equal:
  case Kind::Ite:
    return mk_term(t.kind(), c);

  case Kind::BvAdd:
    return imod(add(c[0], c[1]), num(pow2(k)));
  case Kind::BvSub:
    return imod(sub(c[0], c[1]), num(pow2(k)));
  case Kind::BvNeg:
    return imod(sub(num(pow2(k)), c[0]), num(pow2(k)));
  case Kind::BvMul:
    return imod(mul(c[0], c[1]), num(pow2(k)));
  case Kind::BvUdiv:
    return mk_ite(mk_eq(c[1], num(0)), num(mask(k)), idiv(c[0], c[1]));
  case Kind::BvUrem:
    return mk_ite(mk_eq(c[1], num(0)), c[0], imod(c[0], c[1]));
  case Kind::BvNot:
    return sub(num(mask(k)), c[0]);

  case Kind::BvAnd:
  case Kind::BvShl:
  case Kind::BvLshr: {
    AbstractOp op = t.kind() == Kind::BvAnd   ? AbstractOp::And
                    : t.kind() == Kind::BvShl ? AbstractOp::Shl
                                              : AbstractOp::Lshr;
    std::size_t id = tm.add_app(op, k, c[0], c[1], t);
    return tm.apps()[id].app_term;
  }

  case Kind::Concat:
    return add(mul(c[0], num(pow2(t[1].sort().width()))), c[1]);
  case Kind::Extract: {
    unsigned hi = t.index(0), lo = t.index(1);
    return imod(idiv(c[0], num(pow2(lo))), num(pow2(hi - lo + 1)));
  }
  case Kind::ZeroExtend:
    return c[0];
  case Kind::SignExtend: {
    unsigned n = t.index(0);
    if (n == 0)
      return c[0];
    unsigned w = t[0].sort().width();
    return mk_ite(ge(c[0], num(pow2(w - 1))),
                  add(c[0], num(pow2(w) * mask(n))), c[0]);
  }

  case Kind::BvUlt:
    return mk_term(Kind::IntLt, {c[0], c[1]});
  case Kind::BvUle:
    return le(c[0], c[1]);
  case Kind::BvSlt: {
    unsigned w = t[0].sort().width();
    return mk_term(Kind::IntLt, {unsigned_to_signed(c[0], w),
                                 unsigned_to_signed(c[1], w)});
  }
  case Kind::BvSle: {
    unsigned w = t[0].sort().width();
    return le(unsigned_to_signed(c[0], w), unsigned_to_signed(c[1], w));
  }
  default:
    break;
  }
  throw InternalError("translator expects core operators, got '" +
                      std::string(kind_symbol(t.kind())) + "'");
}

} // namespace

std::string_view abstract_op_name(AbstractOp op) {
  switch (op) {
  case AbstractOp::And:
    return "bvand";
  case AbstractOp::Shl:
    return "bvshl";
  case AbstractOp::Lshr:
    return "bvlshr";
  }
  return {};
}

Integer apply_abstract_op(AbstractOp op, unsigned k, const Integer &a,
                          const Integer &b) {
  switch (op) {
  case AbstractOp::And:
    return a & b;
  case AbstractOp::Shl:
    if (b >= k)
      return 0;
    return (a << b.convert_to<unsigned>()) & mask(k);
  case AbstractOp::Lshr:
    if (b >= k)
      return 0;
    return a >> b.convert_to<unsigned>();
  }
  throw InternalError("unknown abstract operator");
}

const TranslatedVar *TranslationMap::find_var(const std::string &name) const {
  auto it = var_index_.find(name);
  return it == var_index_.end() ? nullptr : &vars_[it->second];
}

std::optional<std::size_t> TranslationMap::find_app(const Term &app_term) const {
  auto it = app_index_.find(app_term);
  if (it == app_index_.end())
    return std::nullopt;
  return it->second;
}

std::string TranslationMap::fresh(const std::string &base) {
  for (unsigned i = 0;; ++i) {
    std::string candidate = base + "!" + std::to_string(i);
    if (used_names_.insert(candidate).second)
      return candidate;
  }
}

const std::string &TranslationMap::uf_symbol(AbstractOp op, unsigned width) {
  auto key = std::make_pair(op, width);
  auto it = ufs_.find(key);
  if (it != ufs_.end())
    return it->second;
  std::string base =
      std::string(abstract_op_name(op)) + "_" + std::to_string(width);
  std::string name = used_names_.insert(base).second ? base : fresh(base);
  return ufs_.emplace(key, std::move(name)).first->second;
}

const TranslatedVar &TranslationMap::add_var(const Term &var) {
  auto it = var_index_.find(var.name());
  if (it != var_index_.end())
    return vars_[it->second];
  used_names_.insert(var.name());
  TranslatedVar tv{var, var, 0};
  if (var.sort().is_bitvec()) {
    tv.width = var.sort().width();
    tv.translated = mk_var(fresh(var.name()), Sort::integer());
    ranges_.push_back(range_constraint(tv.translated, tv.width));
  } else if (!var.sort().is_bool()) {
    throw SortError("cannot translate variable '" + var.name() + "' of sort " +
                    var.sort().to_string());
  }
  var_index_.emplace(var.name(), vars_.size());
  vars_.push_back(std::move(tv));
  return vars_.back();
}

std::size_t TranslationMap::add_app(AbstractOp op, unsigned width,
                                    const Term &lhs, const Term &rhs,
                                    const Term &origin) {
  Term app = mk_apply(uf_symbol(op, width), {lhs, rhs}, Sort::integer());
  auto it = app_index_.find(app);
  if (it != app_index_.end())
    return it->second;
  std::size_t id = apps_.size();
  apps_.push_back({op, width, lhs, rhs, app, origin});
  app_index_.emplace(app, id);
  ranges_.push_back(range_constraint(app, width));
  return id;
}

Term translate_term(const Term &t, TranslationMap &tm) {
  std::unordered_map<Term, Term, TermHash> done;
  std::vector<Term> kids;
  for (const Term &s : post_order(t)) {
    kids.clear();
    for (const Term &c : s.children())
      kids.push_back(done.at(c));
    done.emplace(s, translate_node(s, kids, tm));
  }
  return done.at(t);
}

Translation translate_formula(const Term &phi,
                              const std::vector<Declaration> &decls) {
  if (!phi.sort().is_bool())
    throw SortError("translate_formula expects a Bool formula");
  Translation out;
  for (const Declaration &d : decls)
    out.map.reserve_name(d.name);
  for (const Term &v : oracle::free_variables(phi))
    out.map.reserve_name(v.name());
  for (const Declaration &d : decls)
    if (!d.is_function())
      out.map.add_var(d.var());
  out.formula = translate_term(phi, out.map);
  return out;
}

Term to_bv(const Integer &v, unsigned k) {
  if (v < 0 || v >= pow2(k))
    throw RangeError("value " + v.str() + " is outside [0, 2^" +
                     std::to_string(k) + ")");
  return mk_bv(v, k);
}

Term range_constraint(const Term &t, unsigned k) {
  return mk_and({le(num(0), t), le(t, num(mask(k)))});
}

FunctionInterp true_bv_interp(const TranslationMap &tm) {
  std::map<std::string, std::pair<AbstractOp, unsigned>> by_name;
  for (const auto &[key, name] : tm.uf_registry())
    by_name.emplace(name, key);
  return [by_name](const Term &app, const std::vector<Integer> &args) {
    auto it = by_name.find(app.name());
    if (it == by_name.end() || args.size() != 2)
      throw InternalError("no bit-vector meaning for '" + app.name() + "'");
    return apply_abstract_op(it->second.first, it->second.second, args[0],
                             args[1]);
  };
}

} // namespace intblast
