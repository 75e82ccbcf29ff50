#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lqnash/game.hpp"
#include "lqnash/multipoly.hpp"
#include "lqnash/unipoly.hpp"

namespace lqnash {

enum ExitCode : int { kExitOk = 0, kExitInvalid = 2, kExitConsistency = 3, kExitDisagreement = 4 };

struct GroebnerCheck {
  std::vector<MultiPoly> basis;
  std::optional<UniPoly> from_basis;  // monic
  UniPoly from_formula;               // monic
  bool pass = false;
};

// Buchberger on the stationarity system against the closed-form quintic.
GroebnerCheck groebner_check(const GameParams& params);

// Whole command line, argv[0] included. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lqnash
