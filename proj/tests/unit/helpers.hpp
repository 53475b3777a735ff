#pragma once

#include "intblast/cegar.hpp"
#include "intblast/frontend.hpp"

#include <gtest/gtest.h>

#include <string>

namespace intblast::test {

inline Term bv(const char *name, unsigned w) {
  return mk_var(name, Sort::bitvec(w));
}

inline bool have_z3() {
  std::string path = INTBLAST_Z3;
  return !path.empty() && path.find("NOTFOUND") == std::string::npos;
}

inline SolverCommand z3_command() { return {{INTBLAST_Z3, "-in"}}; }

inline SolverCommand fake_solver(const std::string &mode) {
  return {{INTBLAST_PYTHON, INTBLAST_FAKE_SOLVER, mode}};
}

inline Config z3_config(bool underapprox = true) {
  Config c;
  c.nia_solver = z3_command();
  if (underapprox)
    c.bv_solver = z3_command();
  return c;
}

#define REQUIRE_Z3()                                                           \
  do {                                                                         \
    if (!::intblast::test::have_z3())                                          \
      GTEST_SKIP() << "z3 not found";                                          \
  } while (0)

} // namespace intblast::test
