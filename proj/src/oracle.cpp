#include "intblast/oracle.hpp"

#include "intblast/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace intblast::oracle {

namespace {

// Signed reading of a width-k unsigned value.
Integer to_signed(const Integer &v, unsigned k) {
  return bit_test(v, k - 1) ? v - pow2(k) : v;
}

// Reduces any integer into [0, 2^k).
Integer wrap(const Integer &v, unsigned k) {
  Integer m = pow2(k);
  Integer r = v % m;
  if (r < 0)
    r += m;
  return r;
}

// Quotient rounded toward negative infinity.
Integer floor_div(const Integer &a, const Integer &b) {
  Integer q = a / b; // truncates
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

Value bv(Integer v, unsigned k) { return Value::bitvec(std::move(v), k); }

Value apply_op(const Term &t, const std::vector<const Value *> &a) {
  const unsigned k = t.sort().is_bitvec() ? t.sort().width() : 0;
  auto arg = [&](std::size_t i) -> const Integer & { return a[i]->num; };
  auto aw = [&](std::size_t i) { return a[i]->width; };

  switch (t.kind()) {
  case Kind::Not:
    return Value::boolean(!a[0]->as_bool());
  case Kind::And:
    return Value::boolean(std::all_of(a.begin(), a.end(),
                                      [](const Value *v) { return v->as_bool(); }));
  case Kind::Or:
    return Value::boolean(std::any_of(a.begin(), a.end(),
                                      [](const Value *v) { return v->as_bool(); }));
  case Kind::Xor:
    return Value::boolean(a[0]->as_bool() != a[1]->as_bool());
  case Kind::Implies:
    return Value::boolean(!a[0]->as_bool() || a[1]->as_bool());
  case Kind::Equal:
    return Value::boolean(*a[0] == *a[1]);
  case Kind::Distinct:
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (*a[i] == *a[j])
          return Value::boolean(false);
    return Value::boolean(true);
  case Kind::Ite:
    return a[0]->as_bool() ? *a[1] : *a[2];

  case Kind::BvAdd:
    return bv(wrap(arg(0) + arg(1), k), k);
  case Kind::BvSub:
    return bv(wrap(arg(0) - arg(1), k), k);
  case Kind::BvNeg:
    return bv(wrap(-arg(0), k), k);
  case Kind::BvMul:
    return bv(wrap(arg(0) * arg(1), k), k);
  case Kind::BvUdiv:
    return bv(arg(1) == 0 ? mask(k) : Integer(arg(0) / arg(1)), k);
  case Kind::BvUrem:
    return bv(arg(1) == 0 ? arg(0) : Integer(arg(0) % arg(1)), k);
  case Kind::BvSdiv: {
    Integer s = to_signed(arg(0), k), d = to_signed(arg(1), k);
    if (d == 0)
      return bv(wrap(s < 0 ? Integer(1) : Integer(-1), k), k);
    return bv(wrap(s / d, k), k);
  }
  case Kind::BvSrem: {
    Integer s = to_signed(arg(0), k), d = to_signed(arg(1), k);
    if (d == 0)
      return bv(arg(0), k);
    return bv(wrap(s - d * (s / d), k), k);
  }
  case Kind::BvSmod: {
    Integer s = to_signed(arg(0), k), d = to_signed(arg(1), k);
    if (d == 0)
      return bv(arg(0), k);
    return bv(wrap(s - d * floor_div(s, d), k), k);
  }

  case Kind::BvNot:
    return bv(mask(k) ^ arg(0), k);
  case Kind::BvAnd:
    return bv(arg(0) & arg(1), k);
  case Kind::BvOr:
    return bv(arg(0) | arg(1), k);
  case Kind::BvXor:
    return bv(arg(0) ^ arg(1), k);
  case Kind::BvNand:
    return bv(mask(k) ^ (arg(0) & arg(1)), k);
  case Kind::BvNor:
    return bv(mask(k) ^ (arg(0) | arg(1)), k);
  case Kind::BvXnor:
    return bv(mask(k) ^ (arg(0) ^ arg(1)), k);
  case Kind::BvComp:
    return bv(arg(0) == arg(1) ? 1 : 0, 1);
  case Kind::BvShl:
    if (arg(1) >= k)
      return bv(0, k);
    return bv(wrap(arg(0) << arg(1).convert_to<unsigned>(), k), k);
  case Kind::BvLshr:
    if (arg(1) >= k)
      return bv(0, k);
    return bv(arg(0) >> arg(1).convert_to<unsigned>(), k);
  case Kind::BvAshr: {
    Integer s = to_signed(arg(0), k);
    if (arg(1) >= k)
      return bv(s < 0 ? mask(k) : Integer(0), k);
    return bv(wrap(floor_div(s, pow2(arg(1).convert_to<unsigned>())), k), k);
  }

  case Kind::Concat:
    return bv((arg(0) << aw(1)) | arg(1), k);
  case Kind::Extract:
    return bv((arg(0) >> t.index(1)) & mask(k), k);
  case Kind::ZeroExtend:
    return bv(arg(0), k);
  case Kind::SignExtend: {
    unsigned w = aw(0);
    return bv(wrap(to_signed(arg(0), w), k), k);
  }
  case Kind::RotateLeft: {
    unsigned r = t.index(0) % k;
    return bv(((arg(0) << r) | (arg(0) >> (k - r))) & mask(k), k);
  }
  case Kind::RotateRight: {
    unsigned r = t.index(0) % k;
    return bv(((arg(0) >> r) | (arg(0) << (k - r))) & mask(k), k);
  }
  case Kind::Repeat: {
    Integer out = 0;
    for (unsigned i = 0; i < t.index(0); ++i)
      out = (out << aw(0)) | arg(0);
    return bv(out, k);
  }

  case Kind::BvUlt:
    return Value::boolean(arg(0) < arg(1));
  case Kind::BvUle:
    return Value::boolean(arg(0) <= arg(1));
  case Kind::BvUgt:
    return Value::boolean(arg(0) > arg(1));
  case Kind::BvUge:
    return Value::boolean(arg(0) >= arg(1));
  case Kind::BvSlt:
    return Value::boolean(to_signed(arg(0), aw(0)) < to_signed(arg(1), aw(1)));
  case Kind::BvSle:
    return Value::boolean(to_signed(arg(0), aw(0)) <= to_signed(arg(1), aw(1)));
  case Kind::BvSgt:
    return Value::boolean(to_signed(arg(0), aw(0)) > to_signed(arg(1), aw(1)));
  case Kind::BvSge:
    return Value::boolean(to_signed(arg(0), aw(0)) >= to_signed(arg(1), aw(1)));

  default:
    throw InternalError("oracle cannot evaluate operator '" +
                        std::string(kind_symbol(t.kind())) + "'");
  }
}

} // namespace

Evaluator::Evaluator(const Term &root) : nodes_(post_order(root)) {
  std::unordered_map<Term, std::size_t, TermHash> slot;
  child_slots_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Term &t = nodes_[i];
    if (t.kind() == Kind::Apply || t.sort().is_int())
      throw InternalError("oracle evaluates Bool and bit-vector terms only");
    for (const Term &c : t.children())
      child_slots_[i].push_back(slot.at(c));
    slot.emplace(t, i);
  }
}

Value Evaluator::operator()(const Assignment &sigma) const {
  std::vector<Value> vals(nodes_.size());
  std::vector<const Value *> args;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Term &t = nodes_[i];
    if (t.kind() == Kind::Const) {
      vals[i] = t.sort().is_bool() ? Value::boolean(t.value() == 1)
                                   : Value::bitvec(t.value(), t.sort().width());
    } else if (t.kind() == Kind::Var) {
      auto it = sigma.find(t.name());
      if (it == sigma.end())
        throw IncompleteModelError("no value for variable '" + t.name() + "'");
      if (!(it->second.sort() == t.sort()))
        throw SortError("value for '" + t.name() + "' has the wrong sort");
      vals[i] = it->second;
    } else {
      args.clear();
      for (std::size_t s : child_slots_[i])
        args.push_back(&vals[s]);
      vals[i] = apply_op(t, args);
    }
  }
  return vals.back();
}

Value eval(const Term &t, const Assignment &sigma) { return Evaluator(t)(sigma); }

std::vector<Term> free_variables(const Term &t) {
  std::vector<Term> vars;
  for (const Term &s : post_order(t))
    if (s.kind() == Kind::Var)
      vars.push_back(s);
  std::sort(vars.begin(), vars.end(),
            [](const Term &a, const Term &b) { return a.name() < b.name(); });
  return vars;
}

void for_each_assignment(const std::vector<Term> &vars,
                         const std::function<bool(const Assignment &)> &fn,
                         std::uint64_t budget) {
  std::vector<Integer> sizes;
  Integer total = 1;
  for (const Term &v : vars) {
    if (v.sort().is_int())
      throw BudgetExceeded("integer variable '" + v.name() +
                           "' has an unbounded domain");
    sizes.push_back(v.sort().is_bool() ? Integer(2) : pow2(v.sort().width()));
    total *= sizes.back();
  }
  if (total > budget)
    throw BudgetExceeded("search space of " + total.str() +
                         " assignments exceeds budget " +
                         std::to_string(budget));

  std::vector<Integer> digits(vars.size(), 0);
  Assignment sigma;
  auto store = [&](std::size_t i) {
    const Term &v = vars[i];
    sigma[v.name()] = v.sort().is_bool()
                          ? Value::boolean(digits[i] != 0)
                          : Value::bitvec(digits[i], v.sort().width());
  };
  for (std::size_t i = 0; i < vars.size(); ++i)
    store(i);
  for (;;) {
    if (!fn(sigma))
      return;
    // Odometer: the last variable varies fastest.
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++digits[i] < sizes[i]) {
        store(i);
        break;
      }
      digits[i] = 0;
      store(i);
      if (i == 0)
        return;
    }
    if (vars.empty())
      return;
  }
}

SatResult brute_force_sat(const Term &phi, std::uint64_t budget) {
  if (!phi.sort().is_bool())
    throw SortError("brute_force_sat expects a Bool formula");
  Evaluator ev(phi);
  SatResult result;
  for_each_assignment(
      free_variables(phi),
      [&](const Assignment &sigma) {
        if (ev(sigma).as_bool()) {
          result.sat = true;
          result.model = sigma;
          return false;
        }
        return true;
      },
      budget);
  return result;
}

EquivResult check_equiv(const Term &lhs, const Term &rhs, std::uint64_t budget) {
  if (!(lhs.sort() == rhs.sort()))
    throw SortError("check_equiv expects terms of the same sort");
  Term both = lhs.sort().is_bool() ? mk_term(Kind::Xor, {lhs, rhs})
                                   : mk_not(mk_eq(lhs, rhs));
  Evaluator l(lhs), r(rhs);
  EquivResult result;
  for_each_assignment(
      free_variables(both),
      [&](const Assignment &sigma) {
        if (!(l(sigma) == r(sigma))) {
          result.equivalent = false;
          result.counterexample = sigma;
          return false;
        }
        return true;
      },
      budget);
  return result;
}

} // namespace intblast::oracle
