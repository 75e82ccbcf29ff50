#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lqnash/rational.hpp"
#include <json.hpp>

namespace lqnash {

struct AGrid {
  BigRational min;
  BigRational max;
  int count = 2;
  enum class Spacing { Linear, Log } spacing = Spacing::Linear;
};

struct SweepOutputs {
  std::string csv;
  std::optional<std::string> svg;
  std::optional<std::string> json;
};

struct SweepConfig {
  BigRational q1{1}, r1{1}, q2{1};
  BigRational b1{1}, b2{1}, x0{1};
  AGrid a_grid;
  std::vector<BigRational> r2_values;
  SweepOutputs outputs;
};

// Parses the JSON config document (keys as in SweepConfig, a_grid with
// min/max/count/spacing, outputs with csv/svg/json). Numbers are read as the
// decimal they print as. Throws std::invalid_argument naming the violated
// constraint.
SweepConfig parse_sweep_config(const nlohmann::json& doc);
void validate(const SweepConfig& config);

std::vector<BigRational> a_values(const AGrid& grid);

struct SweepEquilibrium {
  double k1 = 0, k2 = 0, a_cl = 0, j1 = 0, j2 = 0;
};

struct SweepRow {
  double a = 0;
  double r2 = 0;
  double delta = 0;
  int delta_sign = 0;
  int n_real_roots_g = 0;
  int n_nash = 0;
  std::vector<SweepEquilibrium> equilibria;
};

// One row per (r2, a), ordered by r2 then a. Points are solved in parallel;
// the rows are identical for any thread count.
std::vector<SweepRow> run_sweep(const SweepConfig& config);
std::vector<SweepRow> run_sweep_serial(const SweepConfig& config);

// Throws lqnash::ConsistencyError if a row breaks the counting guarantees.
void check_row(const SweepRow& row);

std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);

// sign(d) * log10(1 + |d|).
double symlog(double delta);

// Two stacked panels: symlog(delta) vs a and n_nash vs a, one polyline per r2.
std::string sweep_svg(const std::vector<SweepRow>& rows);

// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

// %.12g, the presentation precision of every floating output.
std::string format_number(double v);
double round_presentation(double v);

}  // namespace lqnash
