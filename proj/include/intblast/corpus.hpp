#pragma once

#include "intblast/frontend.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace intblast::corpus {

struct GeneratorSpec {
  std::uint64_t seed = 1;
  unsigned num_vars = 2;          // 1..3
  std::vector<unsigned> widths{1, 2, 3, 4}; // subset of 1..4
  unsigned max_depth = 3;         // 1..4
  /// Bit-vector operator weights; missing operators have weight 0.
  std::map<Kind, unsigned> op_weights = default_weights();
  unsigned count = 1;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;

  static std::map<Kind, unsigned> default_weights();
};

/// One formula per call slot, deterministic in `spec.seed`. Every script
/// declares its variables, has one assertion and a check-sat.
std::vector<Script> generate(const GeneratorSpec &spec);

struct Crafted {
  std::string name;
  /// Family letter: a (pure arithmetic), b (bvand identities), c (shift
  /// ladders), d (under-approximation), e (expansion-only).
  std::string family;
  Script script;
  /// Verdict worked out by hand; checked against the oracle where it can
  /// enumerate.
  bool expected_sat;
};

std::vector<Crafted> crafted_families();

/// `sat`/`unsat` by brute force, or nullopt when the formula is beyond
/// `budget`.
std::optional<bool> oracle_verdict(const Script &script,
                                   std::uint64_t budget);

struct ManifestEntry {
  std::string path; // relative to the corpus directory
  std::string family;
  std::optional<bool> oracle;
  std::optional<bool> expected;
};

/// Writes `generated/*.smt2`, `crafted/*.smt2` and `manifest.jsonl` under
/// `dir`, returning the manifest rows.
std::vector<ManifestEntry> write_corpus(const std::filesystem::path &dir,
                                        const GeneratorSpec &spec);

std::string script_text(const Script &script);

} // namespace intblast::corpus
