#include "intblast/frontend.hpp"

#include "intblast/errors.hpp"
#include "intblast/printer.hpp"

#include <iterator>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace intblast {

namespace {

enum class Assoc { Fixed, Left, Right, Chain, Nary, Minus };

struct Builtin {
  Kind kind;
  Assoc assoc;
};

const std::map<std::string, Builtin, std::less<>> &builtins() {
  static const std::map<std::string, Builtin, std::less<>> table = {
      {"not", {Kind::Not, Assoc::Fixed}},
      {"and", {Kind::And, Assoc::Nary}},
      {"or", {Kind::Or, Assoc::Nary}},
      {"xor", {Kind::Xor, Assoc::Left}},
      {"=>", {Kind::Implies, Assoc::Right}},
      {"=", {Kind::Equal, Assoc::Chain}},
      {"distinct", {Kind::Distinct, Assoc::Nary}},
      {"ite", {Kind::Ite, Assoc::Fixed}},
      {"bvadd", {Kind::BvAdd, Assoc::Left}},
      {"bvsub", {Kind::BvSub, Assoc::Left}},
      {"bvneg", {Kind::BvNeg, Assoc::Fixed}},
      {"bvmul", {Kind::BvMul, Assoc::Left}},
      {"bvudiv", {Kind::BvUdiv, Assoc::Fixed}},
      {"bvurem", {Kind::BvUrem, Assoc::Fixed}},
      {"bvsdiv", {Kind::BvSdiv, Assoc::Fixed}},
      {"bvsrem", {Kind::BvSrem, Assoc::Fixed}},
      {"bvsmod", {Kind::BvSmod, Assoc::Fixed}},
      {"bvnot", {Kind::BvNot, Assoc::Fixed}},
      {"bvand", {Kind::BvAnd, Assoc::Left}},
      {"bvor", {Kind::BvOr, Assoc::Left}},
      {"bvxor", {Kind::BvXor, Assoc::Left}},
      {"bvnand", {Kind::BvNand, Assoc::Fixed}},
      {"bvnor", {Kind::BvNor, Assoc::Fixed}},
      {"bvxnor", {Kind::BvXnor, Assoc::Fixed}},
      {"bvcomp", {Kind::BvComp, Assoc::Fixed}},
      {"bvshl", {Kind::BvShl, Assoc::Fixed}},
      {"bvlshr", {Kind::BvLshr, Assoc::Fixed}},
      {"bvashr", {Kind::BvAshr, Assoc::Fixed}},
      {"concat", {Kind::Concat, Assoc::Left}},
      {"bvult", {Kind::BvUlt, Assoc::Fixed}},
      {"bvule", {Kind::BvUle, Assoc::Fixed}},
      {"bvugt", {Kind::BvUgt, Assoc::Fixed}},
      {"bvuge", {Kind::BvUge, Assoc::Fixed}},
      {"bvslt", {Kind::BvSlt, Assoc::Fixed}},
      {"bvsle", {Kind::BvSle, Assoc::Fixed}},
      {"bvsgt", {Kind::BvSgt, Assoc::Fixed}},
      {"bvsge", {Kind::BvSge, Assoc::Fixed}},
      {"+", {Kind::IntAdd, Assoc::Left}},
      {"-", {Kind::IntSub, Assoc::Minus}},
      {"*", {Kind::IntMul, Assoc::Left}},
      {"div", {Kind::IntDiv, Assoc::Left}},
      {"mod", {Kind::IntMod, Assoc::Fixed}},
      {"<", {Kind::IntLt, Assoc::Chain}},
      {"<=", {Kind::IntLe, Assoc::Chain}},
      {">", {Kind::IntGt, Assoc::Chain}},
      {">=", {Kind::IntGe, Assoc::Chain}},
  };
  return table;
}

const std::map<std::string, Kind, std::less<>> &indexed_builtins() {
  static const std::map<std::string, Kind, std::less<>> table = {
      {"extract", Kind::Extract},        {"zero_extend", Kind::ZeroExtend},
      {"sign_extend", Kind::SignExtend}, {"rotate_left", Kind::RotateLeft},
      {"rotate_right", Kind::RotateRight}, {"repeat", Kind::Repeat},
  };
  return table;
}

[[noreturn]] void fail_at(const SExpr &e, const std::string &msg) {
  throw ParseError(msg, e.line, e.column);
}

unsigned parse_index(const SExpr &e) {
  if (e.type != SExpr::Type::Numeral)
    fail_at(e, "expected numeral index");
  try {
    unsigned long v = std::stoul(e.text);
    if (v > (1UL << 30))
      fail_at(e, "index too large: " + e.text);
    return static_cast<unsigned>(v);
  } catch (const std::out_of_range &) {
    fail_at(e, "index too large: " + e.text);
  }
}

Integer parse_numeral(const std::string &digits) {
  Integer v = 0;
  for (char c : digits)
    v = v * 10 + (c - '0');
  return v;
}

Term literal_from_digits(const SExpr &e) {
  Integer v = 0;
  if (e.type == SExpr::Type::Binary) {
    for (char c : e.text)
      v = (v << 1) | (c - '0');
    return mk_bv(v, static_cast<unsigned>(e.text.size()));
  }
  for (char c : e.text) {
    int d = (c >= '0' && c <= '9')   ? c - '0'
            : (c >= 'a' && c <= 'f') ? c - 'a' + 10
                                     : c - 'A' + 10;
    v = (v << 4) | d;
  }
  return mk_bv(v, static_cast<unsigned>(e.text.size() * 4));
}

/// Applies `kind` with the chaining convention of its symbol.
Term apply_builtin(const SExpr &where, Builtin b, std::vector<Term> args) {
  try {
    switch (b.assoc) {
    case Assoc::Fixed:
    case Assoc::Nary:
      return mk_term(b.kind, std::move(args));
    case Assoc::Left: {
      if (args.size() < 2)
        return mk_term(b.kind, std::move(args));
      Term acc = args[0];
      for (std::size_t i = 1; i < args.size(); ++i)
        acc = mk_term(b.kind, {acc, args[i]});
      return acc;
    }
    case Assoc::Right: {
      if (args.size() < 2)
        return mk_term(b.kind, std::move(args));
      Term acc = args.back();
      for (std::size_t i = args.size() - 1; i-- > 0;)
        acc = mk_term(b.kind, {args[i], acc});
      return acc;
    }
    case Assoc::Chain: {
      if (args.size() <= 2)
        return mk_term(b.kind, std::move(args));
      std::vector<Term> links;
      for (std::size_t i = 0; i + 1 < args.size(); ++i)
        links.push_back(mk_term(b.kind, {args[i], args[i + 1]}));
      return mk_term(Kind::And, std::move(links));
    }
    case Assoc::Minus:
      if (args.size() == 1)
        return mk_term(Kind::IntNeg, std::move(args));
      return apply_builtin(where, {Kind::IntSub, Assoc::Left}, std::move(args));
    }
  } catch (const SortError &e) {
    throw SortError(std::to_string(where.line) + ":" +
                    std::to_string(where.column) + ": " + e.what());
  }
  throw InternalError("unhandled associativity");
}

class TermBuilder {
public:
  explicit TermBuilder(const SymbolTable &symbols) : symbols_(symbols) {}

  void push_scope(std::unordered_map<std::string, Term> scope) {
    scopes_.push_back(std::move(scope));
  }
  void pop_scope() { scopes_.pop_back(); }

  Term build(const SExpr &e) {
    switch (e.type) {
    case SExpr::Type::Numeral:
      return mk_int(parse_numeral(e.text));
    case SExpr::Type::Binary:
    case SExpr::Type::Hex:
      return literal_from_digits(e);
    case SExpr::Type::Symbol:
      return resolve(e);
    case SExpr::Type::Decimal:
      throw UnsupportedError(e.text, "decimal literal");
    case SExpr::Type::Keyword:
    case SExpr::Type::String:
      fail_at(e, "unexpected token '" + e.text + "' in term position");
    case SExpr::Type::List:
      break;
    }
    if (e.items.empty())
      fail_at(e, "empty application");
    const SExpr &head = e.items.front();
    if (head.is_symbol("_"))
      return indexed_constant(e);
    if (head.is_symbol("let"))
      return let(e);
    if (head.is_symbol("!"))
      return annotated(e);
    if (head.is_list())
      return indexed_application(e);
    if (head.type != SExpr::Type::Symbol)
      fail_at(head, "expected operator symbol");
    if (!head.quoted &&
        (head.text == "forall" || head.text == "exists" || head.text == "as" ||
         head.text == "match"))
      throw UnsupportedError(head.text, "binder");

    std::vector<Term> args;
    args.reserve(e.items.size() - 1);
    for (auto it = std::next(e.items.begin()); it != e.items.end(); ++it)
      args.push_back(build(*it));

    if (!head.quoted) {
      auto b = builtins().find(head.text);
      if (b != builtins().end())
        return apply_builtin(e, b->second, std::move(args));
    }
    auto f = symbols_.functions.find(head.text);
    if (f != symbols_.functions.end()) {
      const auto &[params, result] = f->second;
      if (params.size() != args.size())
        throw SortError(pos(e) + head.text + ": expected " +
                        std::to_string(params.size()) + " argument(s), got " +
                        std::to_string(args.size()));
      for (std::size_t i = 0; i < args.size(); ++i)
        if (!(params[i] == args[i].sort()))
          throw SortError(pos(e) + head.text + ": argument " +
                          std::to_string(i + 1) + " has sort " +
                          args[i].sort().to_string() + ", expected " +
                          params[i].to_string());
      return mk_apply(head.text, std::move(args), result);
    }
    throw UnsupportedError(head.text, "operator");
  }

private:
  static std::string pos(const SExpr &e) {
    return std::to_string(e.line) + ":" + std::to_string(e.column) + ": ";
  }

  Term resolve(const SExpr &e) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(e.text);
      if (found != it->end())
        return found->second;
    }
    if (!e.quoted && e.text == "true")
      return mk_bool(true);
    if (!e.quoted && e.text == "false")
      return mk_bool(false);
    auto c = symbols_.constants.find(e.text);
    if (c != symbols_.constants.end())
      return c->second;
    auto f = symbols_.functions.find(e.text);
    if (f != symbols_.functions.end()) {
      if (!f->second.first.empty())
        throw SortError(pos(e) + e.text + " expects arguments");
      return mk_apply(e.text, {}, f->second.second);
    }
    if (!e.quoted && builtins().count(e.text))
      fail_at(e, "operator '" + e.text + "' used without arguments");
    fail_at(e, "unknown symbol '" + e.text + "'");
  }

  Term indexed_constant(const SExpr &e) {
    if (e.items.size() == 3 && e.items[1].type == SExpr::Type::Symbol &&
        e.items[1].text.rfind("bv", 0) == 0) {
      std::string digits = e.items[1].text.substr(2);
      bool numeric = !digits.empty();
      for (char c : digits)
        numeric = numeric && c >= '0' && c <= '9';
      if (numeric) {
        unsigned width = parse_index(e.items[2]);
        if (width == 0)
          throw SortError(pos(e) + "bit-vector width must be positive");
        Integer v = parse_numeral(digits);
        if (v >= pow2(width))
          throw SortError(pos(e) + "literal bv" + digits +
                          " does not fit in width " + std::to_string(width));
        return mk_bv(v, width);
      }
    }
    if (e.items.size() >= 2 && e.items[1].type == SExpr::Type::Symbol)
      throw UnsupportedError(e.items[1].text, "indexed constant");
    fail_at(e, "malformed indexed identifier");
  }

  Term indexed_application(const SExpr &e) {
    const SExpr &head = e.items.front();
    if (head.items.size() < 2 || !head.items[0].is_symbol("_") ||
        head.items[1].type != SExpr::Type::Symbol)
      fail_at(head, "expected indexed operator");
    const std::string &name = head.items[1].text;
    auto op = indexed_builtins().find(name);
    if (op == indexed_builtins().end())
      throw UnsupportedError(name, "operator");
    std::vector<unsigned> idx;
    for (std::size_t i = 2; i < head.items.size(); ++i)
      idx.push_back(parse_index(head.items[i]));
    std::vector<Term> args;
    for (auto it = std::next(e.items.begin()); it != e.items.end(); ++it)
      args.push_back(build(*it));
    try {
      return mk_term(op->second, std::move(args), std::move(idx));
    } catch (const SortError &err) {
      throw SortError(pos(e) + err.what());
    }
  }

  Term let(const SExpr &e) {
    if (e.items.size() != 3 || !e.items[1].is_list() || e.items[1].items.empty())
      fail_at(e, "malformed let");
    std::unordered_map<std::string, Term> scope;
    for (const SExpr &binding : e.items[1].items) {
      if (!binding.is_list() || binding.items.size() != 2 ||
          binding.items[0].type != SExpr::Type::Symbol)
        fail_at(binding, "malformed let binding");
      // Bindings are parallel: evaluate in the enclosing scope.
      Term value = build(binding.items[1]);
      if (!scope.emplace(binding.items[0].text, value).second)
        fail_at(binding, "duplicate let binding '" + binding.items[0].text +
                             "'");
    }
    push_scope(std::move(scope));
    Term body = build(e.items[2]);
    pop_scope();
    return body;
  }

  Term annotated(const SExpr &e) {
    if (e.items.size() < 2)
      fail_at(e, "malformed annotation");
    for (std::size_t i = 2; i < e.items.size(); ++i)
      if (e.items[i].type == SExpr::Type::Keyword && i + 1 < e.items.size() &&
          e.items[i + 1].type != SExpr::Type::Keyword)
        ++i;
    return build(e.items[1]);
  }

  const SymbolTable &symbols_;
  std::vector<std::unordered_map<std::string, Term>> scopes_;
};


std::string attribute_value_text(const SExpr &e) {
  switch (e.type) {
  case SExpr::Type::List: {
    std::string out = "(";
    for (std::size_t i = 0; i < e.items.size(); ++i) {
      if (i)
        out += ' ';
      out += attribute_value_text(e.items[i]);
    }
    return out + ")";
  }
  case SExpr::Type::Binary:
    return "#b" + e.text;
  case SExpr::Type::Hex:
    return "#x" + e.text;
  case SExpr::Type::String:
    return "\"" + e.text + "\"";
  case SExpr::Type::Symbol:
    return e.quoted ? "|" + e.text + "|" : e.text;
  default:
    return e.text;
  }
}

} // namespace

Sort parse_sort(const SExpr &e) {
  if (e.is_symbol("Bool"))
    return Sort::boolean();
  if (e.is_symbol("Int"))
    return Sort::integer();
  if (e.is_list() && e.items.size() == 3 && e.items[0].is_symbol("_") &&
      e.items[1].is_symbol("BitVec")) {
    unsigned w = parse_index(e.items[2]);
    if (w == 0)
      throw SortError(std::to_string(e.line) + ":" + std::to_string(e.column) +
                      ": bit-vector width must be positive");
    return Sort::bitvec(w);
  }
  if (e.type == SExpr::Type::Symbol)
    throw UnsupportedError(e.text, "sort");
  fail_at(e, "malformed sort");
}

Term build_term(const SExpr &expr, const SymbolTable &symbols) {
  TermBuilder b(symbols);
  return b.build(expr);
}

Term parse_term(std::string_view text, const SymbolTable &symbols) {
  auto exprs = parse_sexprs(text);
  if (exprs.size() != 1)
    throw ParseError("expected exactly one term", 1, 1);
  return build_term(exprs.front(), symbols);
}

void SymbolTable::add_symbols_of(const Term &t) {
  for (const Term &s : post_order(t)) {
    if (s.kind() == Kind::Var) {
      constants.insert_or_assign(s.name(), s);
    } else if (s.kind() == Kind::Apply) {
      std::vector<Sort> params;
      for (const Term &c : s.children())
        params.push_back(c.sort());
      functions.insert_or_assign(s.name(),
                                 std::make_pair(std::move(params), s.sort()));
    }
  }
}

Term Script::formula() const { return mk_and(assertions); }

bool Script::is_integer_problem() const {
  for (const Declaration &d : declarations)
    if (d.is_function() || d.sort.is_int())
      return true;
  return false;
}

const Declaration *Script::find_declaration(std::string_view name) const {
  for (const Declaration &d : declarations)
    if (d.name == name)
      return &d;
  return nullptr;
}

Script parse_script(std::string_view input) {
  Script script;
  SymbolTable symbols;
  std::set<std::string, std::less<>> taken;

  auto claim = [&](const SExpr &at, const std::string &name) {
    if (!taken.insert(name).second)
      fail_at(at, "symbol '" + name + "' already declared");
  };

  for (const SExpr &cmd : parse_sexprs(input)) {
    if (!cmd.is_list() || cmd.items.empty() ||
        cmd.items[0].type != SExpr::Type::Symbol)
      fail_at(cmd, "expected a command");
    const std::string &name = cmd.items[0].text;
    auto arity = [&](std::size_t n) {
      if (cmd.items.size() != n + 1)
        fail_at(cmd, "'" + name + "' expects " + std::to_string(n) +
                         " argument(s)");
    };

    if (name == "exit")
      break;
    if (script.has_check_sat && name != "get-model")
      throw UnsupportedError(name, "command after check-sat");

    if (name == "set-logic") {
      arity(1);
      script.logic = cmd.items[1].text;
    } else if (name == "set-info" || name == "set-option") {
      if (cmd.items.size() < 2 || cmd.items[1].type != SExpr::Type::Keyword)
        fail_at(cmd, "'" + name + "' expects a keyword");
      std::string value =
          cmd.items.size() > 2 ? attribute_value_text(cmd.items[2]) : "";
      if (name == "set-option")
        script.options[cmd.items[1].text] = value;
    } else if (name == "declare-const") {
      arity(2);
      if (cmd.items[1].type != SExpr::Type::Symbol)
        fail_at(cmd.items[1], "expected symbol");
      Sort s = parse_sort(cmd.items[2]);
      claim(cmd.items[1], cmd.items[1].text);
      script.declarations.push_back({cmd.items[1].text, s, {}});
      symbols.add(mk_var(cmd.items[1].text, s));
    } else if (name == "declare-fun") {
      arity(3);
      if (cmd.items[1].type != SExpr::Type::Symbol || !cmd.items[2].is_list())
        fail_at(cmd, "malformed declare-fun");
      const std::string &fname = cmd.items[1].text;
      std::vector<Sort> params;
      for (const SExpr &p : cmd.items[2].items)
        params.push_back(parse_sort(p));
      Sort result = parse_sort(cmd.items[3]);
      if (!params.empty()) {
        bool integer_fn = result.is_int();
        for (const Sort &p : params)
          integer_fn = integer_fn && p.is_int();
        if (!integer_fn)
          throw UnsupportedError(fname, "declare-fun with non-zero arity");
      }
      claim(cmd.items[1], fname);
      script.declarations.push_back({fname, result, params});
      if (params.empty())
        symbols.add(mk_var(fname, result));
      else
        symbols.functions.emplace(fname, std::make_pair(params, result));
    } else if (name == "define-fun") {
      arity(4);
      if (cmd.items[1].type != SExpr::Type::Symbol || !cmd.items[2].is_list())
        fail_at(cmd, "malformed define-fun");
      Definition def;
      def.name = cmd.items[1].text;
      std::unordered_map<std::string, Term> scope;
      std::vector<Sort> param_sorts;
      for (const SExpr &p : cmd.items[2].items) {
        if (!p.is_list() || p.items.size() != 2 ||
            p.items[0].type != SExpr::Type::Symbol)
          fail_at(p, "malformed parameter");
        Term v = mk_var(p.items[0].text, parse_sort(p.items[1]));
        if (!scope.emplace(p.items[0].text, v).second)
          fail_at(p, "duplicate parameter '" + p.items[0].text + "'");
        def.params.push_back(v);
        param_sorts.push_back(v.sort());
      }
      def.result = parse_sort(cmd.items[3]);
      claim(cmd.items[1], def.name);
      // The name is visible in its own body so that self-reference is
      // reported by expand_defines rather than as an unknown symbol.
      symbols.functions.emplace(def.name,
                                std::make_pair(param_sorts, def.result));
      TermBuilder b(symbols);
      b.push_scope(std::move(scope));
      def.body = b.build(cmd.items[4]);
      if (!(def.body.sort() == def.result))
        throw SortError(std::to_string(cmd.line) + ":" +
                        std::to_string(cmd.column) + ": body of '" + def.name +
                        "' has sort " + def.body.sort().to_string() +
                        ", declared " + def.result.to_string());
      script.definitions.push_back(std::move(def));
    } else if (name == "assert") {
      arity(1);
      Term t = build_term(cmd.items[1], symbols);
      if (!t.sort().is_bool())
        throw SortError(std::to_string(cmd.line) + ":" +
                        std::to_string(cmd.column) +
                        ": assertion must have sort Bool, got " +
                        t.sort().to_string());
      script.assertions.push_back(std::move(t));
    } else if (name == "check-sat") {
      arity(0);
      script.has_check_sat = true;
    } else if (name == "get-model") {
      arity(0);
      if (!script.has_check_sat)
        throw UnsupportedError(name, "command before check-sat");
      script.wants_model = true;
    } else {
      throw UnsupportedError(name, "command");
    }
  }
  return script;
}

Script parse_script(std::istream &in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_script(text);
}

Script expand_defines(const Script &script) {
  std::unordered_map<std::string, const Definition *> defs;
  for (const Definition &d : script.definitions)
    defs.emplace(d.name, &d);

  std::unordered_map<std::string, Term> expanded_bodies;
  std::unordered_set<std::string> in_progress;

  std::function<Term(const Term &)> expand;
  std::function<const Term &(const Definition &)> body_of =
      [&](const Definition &d) -> const Term & {
    auto done = expanded_bodies.find(d.name);
    if (done != expanded_bodies.end())
      return done->second;
    if (!in_progress.insert(d.name).second)
      throw RecursionError("definition '" + d.name + "' is recursive");
    Term body = expand(d.body);
    in_progress.erase(d.name);
    return expanded_bodies.emplace(d.name, body).first->second;
  };

  expand = [&](const Term &root) {
    return rewrite_bottom_up(root, [&](const Term &, const Term &t) -> Term {
      if (t.kind() != Kind::Apply)
        return t;
      auto d = defs.find(t.name());
      if (d == defs.end())
        return t;
      const Definition &def = *d->second;
      const Term &body = body_of(def);
      std::unordered_map<Term, Term, TermHash> subst;
      for (std::size_t i = 0; i < def.params.size(); ++i)
        subst.emplace(def.params[i], t[i]);
      // Simultaneous substitution: arguments are never revisited, so
      // variables inside them cannot be captured by parameter names.
      return rewrite_bottom_up(body, [&](const Term &orig, const Term &r) {
        if (orig.kind() == Kind::Var) {
          auto s = subst.find(orig);
          if (s != subst.end())
            return s->second;
        }
        return r;
      });
    });
  };

  Script out = script;
  out.definitions.clear();
  for (const Definition &d : script.definitions)
    body_of(d);
  for (Term &a : out.assertions)
    a = expand(a);
  return out;
}

std::string declaration_text(const std::string &name,
                             const std::vector<Sort> &params, Sort result) {
  std::string out = "(declare-fun " + quote_symbol(name) + " (";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i)
      out += ' ';
    out += params[i].to_string();
  }
  return out + ") " + result.to_string() + ")";
}

void print_script(std::ostream &os, const std::string &logic,
                  const std::vector<Term> &assertions) {
  if (!logic.empty())
    os << "(set-logic " << logic << ")\n";
  std::unordered_set<std::string> declared;
  for (const Term &a : assertions) {
    for (const Term &s : post_order(a)) {
      if ((s.kind() != Kind::Var && s.kind() != Kind::Apply) ||
          !declared.insert(s.name()).second)
        continue;
      std::vector<Sort> params;
      for (const Term &c : s.children())
        params.push_back(c.sort());
      os << declaration_text(s.name(), params, s.sort()) << '\n';
    }
  }
  for (const Term &a : assertions) {
    os << "(assert ";
    print_term(os, a);
    os << ")\n";
  }
  os << "(check-sat)\n";
}

void print_script(std::ostream &os, const Script &script) {
  if (!script.logic.empty())
    os << "(set-logic " << script.logic << ")\n";
  for (const Declaration &d : script.declarations)
    os << declaration_text(d.name, d.params, d.sort) << '\n';
  for (const Definition &def : script.definitions) {
    os << "(define-fun " << quote_symbol(def.name) << " (";
    for (std::size_t i = 0; i < def.params.size(); ++i) {
      if (i)
        os << ' ';
      os << '(' << quote_symbol(def.params[i].name()) << ' '
         << def.params[i].sort().to_string() << ')';
    }
    os << ") " << def.result.to_string() << ' ';
    print_term(os, def.body);
    os << ")\n";
  }
  for (const Term &a : script.assertions) {
    os << "(assert ";
    print_term(os, a);
    os << ")\n";
  }
  if (script.has_check_sat)
    os << "(check-sat)\n";
  if (script.wants_model)
    os << "(get-model)\n";
}

} // namespace intblast
