#pragma once

#include <cstdint>
#include <string>

namespace intblast {

class Sort {
public:
  enum class Kind : std::uint8_t { Bool, BitVec, Int };

  static Sort boolean() { return Sort(Kind::Bool, 0); }
  static Sort integer() { return Sort(Kind::Int, 0); }
  /// Throws SortError for width 0.
  static Sort bitvec(unsigned width);

  Kind kind() const { return kind_; }
  /// Bit width; 0 for Bool and Int.
  unsigned width() const { return width_; }

  bool is_bool() const { return kind_ == Kind::Bool; }
  bool is_bitvec() const { return kind_ == Kind::BitVec; }
  bool is_int() const { return kind_ == Kind::Int; }

  /// SMT-LIB concrete syntax, e.g. `(_ BitVec 8)`.
  std::string to_string() const;

  friend bool operator==(const Sort &, const Sort &) = default;

private:
  Sort(Kind kind, unsigned width) : kind_(kind), width_(width) {}

  Kind kind_;
  unsigned width_;
};

} // namespace intblast
