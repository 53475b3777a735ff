#pragma once

#include "intblast/translate.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace intblast {

enum class LemmaTier { Base = 1, Instance = 2, FullExpansion = 3, UnderApproxCore = 4 };

std::string_view tier_name(LemmaTier tier);

struct Lemma {
  Term formula;
  LemmaTier tier;
  /// Index of the AbstractedApp that produced the lemma; empty for core
  /// lemmas, which are global.
  std::optional<std::size_t> source;
};

/// Cheap algebraic facts about one application, instantiated at its
/// argument terms: 9 for bvand, 3 for each shift.
std::vector<Lemma> base_lemmas(const TranslationMap &tm, std::size_t app);

/// (lhs = a ∧ rhs = b) → app = f(a, b) for the true bit-vector f.
Lemma instance_lemma(const TranslationMap &tm, std::size_t app,
                     const Integer &a, const Integer &b);

/// Defines the application completely: a bit sum for bvand, an ite ladder
/// over the shift amount for the shifts.
Lemma full_expansion(const TranslationMap &tm, std::size_t app);

/// An under-approximation assumption `var = value` that took part in an
/// unsat core. Width 0 marks a Bool variable (value 0/1).
struct CoreAssumption {
  std::string var;
  Integer value;
  unsigned width;
};

/// ⋁ (x′ ≠ v) over the translated variables. Throws EmptyCoreError for an
/// empty core.
Lemma core_lemma(const std::vector<CoreAssumption> &core,
                 const TranslationMap &tm);

} // namespace intblast
