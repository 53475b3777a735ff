#include "intblast/arith.hpp"

#include "intblast/errors.hpp"

#include <unordered_map>

namespace intblast {

Integer euclid_div(const Integer &a, const Integer &b) {
  if (b == 0)
    throw InternalError("integer division by zero");
  Integer q = a / b;
  Integer r = a - q * b;
  if (r < 0)
    q += (b > 0 ? -1 : 1);
  return q;
}

Integer euclid_mod(const Integer &a, const Integer &b) {
  return a - b * euclid_div(a, b);
}

namespace {

class ArithEvaluator {
public:
  ArithEvaluator(const Assignment &env, const FunctionInterp &interp)
      : env_(env), interp_(interp) {}

  const Value &eval(const Term &t) {
    auto hit = memo_.find(t);
    if (hit != memo_.end())
      return hit->second;
    Value v = compute(t);
    return memo_.emplace(t, std::move(v)).first->second;
  }

private:
  const Integer &num(const Term &t) { return eval(t).num; }
  bool truth(const Term &t) { return eval(t).as_bool(); }

  Value compute(const Term &t) {
    switch (t.kind()) {
    case Kind::Const:
      if (t.sort().is_bool())
        return Value::boolean(t.value() == 1);
      if (t.sort().is_int())
        return Value::integer(t.value());
      break;
    case Kind::Var: {
      auto it = env_.find(t.name());
      if (it == env_.end())
        throw IncompleteModelError("no value for '" + t.name() + "'");
      return it->second;
    }
    case Kind::Not:
      return Value::boolean(!truth(t[0]));
    case Kind::And:
      for (const Term &c : t.children())
        if (!truth(c))
          return Value::boolean(false);
      return Value::boolean(true);
    case Kind::Or:
      for (const Term &c : t.children())
        if (truth(c))
          return Value::boolean(true);
      return Value::boolean(false);
    case Kind::Xor:
      return Value::boolean(truth(t[0]) != truth(t[1]));
    case Kind::Implies:
      return Value::boolean(!truth(t[0]) || truth(t[1]));
    case Kind::Equal:
      return Value::boolean(eval(t[0]) == eval(t[1]));
    case Kind::Distinct:
      for (std::size_t i = 0; i < t.num_children(); ++i)
        for (std::size_t j = i + 1; j < t.num_children(); ++j)
          if (eval(t[i]) == eval(t[j]))
            return Value::boolean(false);
      return Value::boolean(true);
    case Kind::Ite:
      return truth(t[0]) ? eval(t[1]) : eval(t[2]);
    case Kind::IntAdd:
      return Value::integer(num(t[0]) + num(t[1]));
    case Kind::IntSub:
      return Value::integer(num(t[0]) - num(t[1]));
    case Kind::IntNeg:
      return Value::integer(-num(t[0]));
    case Kind::IntMul:
      return Value::integer(num(t[0]) * num(t[1]));
    case Kind::IntDiv:
      return Value::integer(euclid_div(num(t[0]), num(t[1])));
    case Kind::IntMod:
      return Value::integer(euclid_mod(num(t[0]), num(t[1])));
    case Kind::IntLt:
      return Value::boolean(num(t[0]) < num(t[1]));
    case Kind::IntLe:
      return Value::boolean(num(t[0]) <= num(t[1]));
    case Kind::IntGt:
      return Value::boolean(num(t[0]) > num(t[1]));
    case Kind::IntGe:
      return Value::boolean(num(t[0]) >= num(t[1]));
    case Kind::Apply: {
      std::vector<Integer> args;
      for (const Term &c : t.children())
        args.push_back(num(c));
      return Value::integer(interp_(t, args));
    }
    default:
      break;
    }
    throw InternalError("arithmetic evaluator cannot handle '" +
                        std::string(kind_symbol(t.kind())) + "'");
  }

  const Assignment &env_;
  const FunctionInterp &interp_;
  std::unordered_map<Term, Value, TermHash> memo_;
};

} // namespace

Value eval_arith(const Term &t, const Assignment &env,
                 const FunctionInterp &interp) {
  ArithEvaluator ev(env, interp);
  return ev.eval(t);
}

} // namespace intblast
