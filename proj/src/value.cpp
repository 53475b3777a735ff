#include "intblast/value.hpp"

#include "intblast/printer.hpp"

namespace intblast {

Sort Value::sort() const {
  switch (type) {
  case Type::Bool:
    return Sort::boolean();
  case Type::BitVec:
    return Sort::bitvec(width);
  case Type::Int:
    break;
  }
  return Sort::integer();
}

std::string Value::to_smtlib() const {
  switch (type) {
  case Type::Bool:
    return as_bool() ? "true" : "false";
  case Type::BitVec:
    return bv_literal(num, width);
  case Type::Int:
    break;
  }
  return num < 0 ? "(- " + Integer(-num).str() + ")" : num.str();
}

} // namespace intblast
