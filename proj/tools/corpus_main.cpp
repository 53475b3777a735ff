// intblast-corpus: write the random and crafted test corpus to a directory.

#include "intblast/corpus.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
  intblast::corpus::GeneratorSpec spec;
  spec.count = 500;
  std::string out = "corpus";
  CLI::App app{"Generate QF_BV formulas with brute-force verdicts"};
  app.add_option("--seed", spec.seed, "generator seed");
  app.add_option("--count", spec.count, "number of random formulas");
  app.add_option("--vars", spec.num_vars, "variables per formula")
      ->check(CLI::Range(1u, 3u));
  app.add_option("--widths", spec.widths, "bit-widths to draw from")
      ->check(CLI::Range(1u, 4u));
  app.add_option("--max-depth", spec.max_depth, "formula depth bound")
      ->check(CLI::Range(1u, 4u));
  app.add_option("--out", out, "output directory");
  CLI11_PARSE(app, argc, argv);

  try {
    auto rows = intblast::corpus::write_corpus(out, spec);
    std::cout << rows.size() << " scripts written to " << out << '\n';
  } catch (const std::exception &e) {
    std::cerr << "intblast-corpus: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
