#pragma once

#include <string>

#include <json.hpp>

#include "lqnash/game.hpp"
#include "lqnash/oracle.hpp"
#include "lqnash/solver.hpp"

namespace lqnash {

// Floating fields are rounded to 12 significant digits, so parsing the dump
// and dumping again reproduces it byte for byte.
nlohmann::json solve_report_json(const SolveReport& report);

// Document for a = 0: the single equilibrium (0, 0).
nlohmann::json trivial_game_json(const GameParams& params);

std::string solve_report_table(const SolveReport& report);
std::string trivial_game_table(const GameParams& params);

// Agreement matrix plus any disagreeing pairs.
std::string verify_report_text(const VerifyReport& report);

}  // namespace lqnash
