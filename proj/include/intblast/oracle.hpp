#pragma once

#include "intblast/term.hpp"
#include "intblast/value.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace intblast::oracle {

/// Enumeration limit for brute-force queries (number of assignments).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Ground-truth SMT-LIB semantics for Bool and bit-vector terms, covering the
/// full operator set. Int terms and function applications are rejected.
/// Throws IncompleteModelError if a variable is unassigned.
Value eval(const Term &t, const Assignment &sigma);

/// Evaluates one term under many assignments without re-walking the DAG.
class Evaluator {
public:
  explicit Evaluator(const Term &root);
  Value operator()(const Assignment &sigma) const;

private:
  std::vector<Term> nodes_;
  std::vector<std::vector<std::size_t>> child_slots_;
};

/// Free variables of `t` ordered by name.
std::vector<Term> free_variables(const Term &t);

struct SatResult {
  bool sat = false;
  /// Lexicographically first satisfying assignment when sat.
  Assignment model;
};

/// Enumerates all assignments (variables by name, values ascending, first
/// variable most significant). Throws BudgetExceeded when the search space
/// is larger than `budget`.
SatResult brute_force_sat(const Term &phi,
                          std::uint64_t budget = kDefaultBudget);

struct EquivResult {
  bool equivalent = true;
  std::optional<Assignment> counterexample;
};

/// Exhaustive comparison of two terms of the same sort.
EquivResult check_equiv(const Term &lhs, const Term &rhs,
                        std::uint64_t budget = kDefaultBudget);

/// Calls `fn` on every assignment of `vars` in enumeration order until it
/// returns false. Throws BudgetExceeded as brute_force_sat does.
void for_each_assignment(const std::vector<Term> &vars,
                         const std::function<bool(const Assignment &)> &fn,
                         std::uint64_t budget = kDefaultBudget);

} // namespace intblast::oracle
