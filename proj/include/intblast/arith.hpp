#pragma once

#include "intblast/term.hpp"
#include "intblast/value.hpp"

#include <functional>
#include <vector>

namespace intblast {

/// Interpretation of function applications: receives the application term
/// and its evaluated arguments.
using FunctionInterp =
    std::function<Integer(const Term &app, const std::vector<Integer> &args)>;

/// Evaluates an Int/Bool term with SMT-LIB Int semantics (Euclidean div and
/// mod). `ite` is evaluated lazily, so guarded divisions by zero in the
/// branch not taken are harmless; an unguarded one throws InternalError.
/// Throws IncompleteModelError for unassigned variables.
Value eval_arith(const Term &t, const Assignment &env,
                 const FunctionInterp &interp);

/// Euclidean division and remainder (remainder always non-negative).
Integer euclid_div(const Integer &a, const Integer &b);
Integer euclid_mod(const Integer &a, const Integer &b);

} // namespace intblast
