#pragma once

#include "intblast/integer.hpp"
#include "intblast/sort.hpp"

#include <map>
#include <string>

namespace intblast {

/// A concrete Bool, bit-vector or integer value.
struct Value {
  enum class Type { Bool, BitVec, Int };

  Type type = Type::Bool;
  Integer num = 0;
  unsigned width = 0;

  static Value boolean(bool b) { return {Type::Bool, b ? 1 : 0, 0}; }
  static Value bitvec(Integer v, unsigned w) {
    return {Type::BitVec, std::move(v), w};
  }
  static Value integer(Integer v) { return {Type::Int, std::move(v), 0}; }

  bool as_bool() const { return num != 0; }
  Sort sort() const;
  /// SMT-LIB literal (`true`, `#b0101`, `7`).
  std::string to_smtlib() const;

  friend bool operator==(const Value &, const Value &) = default;
};

/// Variable name -> value.
using Assignment = std::map<std::string, Value>;

} // namespace intblast
