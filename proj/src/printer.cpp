#include "intblast/printer.hpp"

#include "intblast/errors.hpp"

#include <array>
#include <sstream>

namespace intblast {

namespace {

constexpr std::array<std::string_view, 15> kReserved = {
    "_",      "!",           "as",     "let",      "exists",
    "forall", "match",       "par",    "BINARY",   "DECIMAL",
    "HEXADECIMAL", "NUMERAL", "STRING", "true",    "false"};

bool is_simple_char(char c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
      (c >= '0' && c <= '9'))
    return true;
  return std::string_view("~!@$%^&*_-+=<>.?/").find(c) !=
         std::string_view::npos;
}

void print_rec(std::ostream &os, const Term &t) {
  switch (t.kind()) {
  case Kind::Const:
    if (t.sort().is_bool())
      os << (t.value() == 1 ? "true" : "false");
    else if (t.sort().is_bitvec())
      os << bv_literal(t.value(), t.sort().width());
    else
      os << t.value().str();
    return;
  case Kind::Var:
    os << quote_symbol(t.name());
    return;
  case Kind::Apply:
    if (t.num_children() == 0) {
      os << quote_symbol(t.name());
      return;
    }
    os << '(' << quote_symbol(t.name());
    break;
  default:
    os << '(';
    if (kind_num_indices(t.kind()) > 0) {
      os << "(_ " << kind_symbol(t.kind());
      for (unsigned i : t.indices())
        os << ' ' << i;
      os << ')';
    } else {
      os << kind_symbol(t.kind());
    }
    break;
  }
  for (const Term &c : t.children()) {
    os << ' ';
    print_rec(os, c);
  }
  os << ')';
}

} // namespace

std::string quote_symbol(std::string_view sym) {
  bool simple = !sym.empty() && !(sym[0] >= '0' && sym[0] <= '9');
  for (char c : sym)
    simple = simple && is_simple_char(c);
  for (std::string_view r : kReserved)
    simple = simple && sym != r;
  if (simple)
    return std::string(sym);
  if (sym.find('|') != std::string_view::npos ||
      sym.find('\\') != std::string_view::npos)
    throw InternalError("symbol cannot be quoted: " + std::string(sym));
  return "|" + std::string(sym) + "|";
}

std::string bv_literal(const Integer &value, unsigned width) {
  std::string out = "#b";
  out.reserve(width + 2);
  for (unsigned i = width; i-- > 0;)
    out.push_back(bit_test(value, i) ? '1' : '0');
  return out;
}

void print_term(std::ostream &os, const Term &t) { print_rec(os, t); }

std::string to_smtlib(const Term &t) {
  std::ostringstream os;
  print_rec(os, t);
  return os.str();
}

} // namespace intblast
