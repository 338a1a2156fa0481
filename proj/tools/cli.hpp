#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mgcolor/generators.hpp"
#include "mgcolor/rational.hpp"

namespace mgcolor::cli {

enum ExitCode : int {
  kOk = 0,
  kPrecondition = 2,
  kConstruction = 3,
  kIo = 4,
};

struct RunConfig {
  // analyze, color, factorize, decompose, verify, oracle, generate
  std::string subcommand;
  std::string input;     // graph file
  std::string coloring;  // verify only
  std::string output;    // stdout when empty
  std::string trace;     // color only; no trace when empty

  Rational epsilon{1, 2};
  bool desk_scale = false;
  std::uint64_t seed = 1;

  int enumeration_cap = 16;
  int oracle_cap = 40;
  int hamilton_cap = 20;

  // generate: a named instance, or regime and sizes
  std::string named;
  std::string regime = "regular";  // regular, min-degree, deficient-dense
  int n = 0;
  int r = 1;
  int target = 0;
};

// Checks epsilon in (0,1) and positive caps; returns the first violation.
std::string validate(const RunConfig& config);

// Runs one subcommand. Results go to `out` (or the --output file), errors to
// `err` as "error: <code> [<stage>]: <message>".
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mgcolor::cli
