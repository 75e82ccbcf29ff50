#include "lqnash/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lqnash/game.hpp"
#include "lqnash/solver.hpp"

namespace lqnash {
namespace {

BigRational read_number(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw std::invalid_argument(std::string("missing key ") + key);
  const auto& v = doc.at(key);
  if (v.is_number_integer()) return BigRational(static_cast<long>(v.get<long long>()));
  if (v.is_number()) return rational_from_decimal_double(v.get<double>());
  if (v.is_string()) {
    auto parsed = parse_rational(v.get<std::string>());
    if (!parsed) throw std::invalid_argument(std::string(key) + " is not a rational number");
    return *parsed;
  }
  throw std::invalid_argument(std::string(key) + " must be a number");
}

BigRational read_number_or(const nlohmann::json& doc, const char* key, long fallback) {
  return doc.contains(key) ? read_number(doc, key) : BigRational(fallback);
}

}  // namespace

SweepConfig parse_sweep_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
  SweepConfig c;
  c.q1 = read_number(doc, "q1");
  c.r1 = read_number(doc, "r1");
  c.q2 = read_number(doc, "q2");
  c.b1 = read_number_or(doc, "b1", 1);
  c.b2 = read_number_or(doc, "b2", 1);
  c.x0 = read_number_or(doc, "x0", 1);

  if (!doc.contains("a_grid") || !doc.at("a_grid").is_object()) throw std::invalid_argument("missing a_grid object");
  const auto& g = doc.at("a_grid");
  c.a_grid.min = read_number(g, "min");
  c.a_grid.max = read_number(g, "max");
  if (!g.contains("count") || !g.at("count").is_number_integer()) throw std::invalid_argument("a_grid.count must be an integer");
  c.a_grid.count = g.at("count").get<int>();
  const std::string spacing = g.value("spacing", std::string("linear"));
  if (spacing == "linear")
    c.a_grid.spacing = AGrid::Spacing::Linear;
  else if (spacing == "log")
    c.a_grid.spacing = AGrid::Spacing::Log;
  else
    throw std::invalid_argument("a_grid.spacing must be linear or log");

  if (!doc.contains("r2_values") || !doc.at("r2_values").is_array())
    throw std::invalid_argument("r2_values must be an array");
  for (std::size_t i = 0; i < doc.at("r2_values").size(); ++i) {
    nlohmann::json wrap = {{"r2", doc.at("r2_values")[i]}};
    c.r2_values.push_back(read_number(wrap, "r2"));
  }

  if (!doc.contains("outputs") || !doc.at("outputs").is_object()) throw std::invalid_argument("missing outputs object");
  const auto& o = doc.at("outputs");
  if (!o.contains("csv") || !o.at("csv").is_string()) throw std::invalid_argument("outputs.csv must be a path");
  c.outputs.csv = o.at("csv").get<std::string>();
  if (o.contains("svg") && !o.at("svg").is_null()) c.outputs.svg = o.at("svg").get<std::string>();
  if (o.contains("json") && !o.at("json").is_null()) c.outputs.json = o.at("json").get<std::string>();

  validate(c);
  return c;
}

void validate(const SweepConfig& c) {
  if (!(c.a_grid.min > 0)) throw std::invalid_argument("a_grid.min must be > 0");
  if (c.a_grid.count < 1) throw std::invalid_argument("a_grid.count must be >= 1");
  if (c.a_grid.count >= 2 && !(c.a_grid.max > c.a_grid.min)) throw std::invalid_argument("a_grid.max must be > a_grid.min");
  if (c.a_grid.count == 1 && c.a_grid.max != c.a_grid.min) throw std::invalid_argument("a single-point grid needs min == max");
  if (c.r2_values.empty()) throw std::invalid_argument("r2_values must be nonempty");
  for (const auto& r2 : c.r2_values)
    if (!(r2 > 0)) throw std::invalid_argument("r2 values must be > 0");
  if (!(c.q1 > 0)) throw std::invalid_argument("q1 must be > 0");
  if (!(c.q2 > 0)) throw std::invalid_argument("q2 must be > 0");
  if (!(c.r1 > 0)) throw std::invalid_argument("r1 must be > 0");
  if (c.b1 == 0) throw std::invalid_argument("b1 must be nonzero");
  if (c.b2 == 0) throw std::invalid_argument("b2 must be nonzero");
}

std::vector<BigRational> a_values(const AGrid& grid) {
  std::vector<BigRational> out;
  if (grid.count == 1) return {grid.min};
  const int last = grid.count - 1;
  for (int i = 0; i <= last; ++i) {
    if (grid.spacing == AGrid::Spacing::Linear) {
      out.push_back(grid.min + (grid.max - grid.min) * ratio(i, last));
    } else {
      const double lo = std::log(to_double(grid.min));
      const double hi = std::log(to_double(grid.max));
      const double v = i == 0 ? to_double(grid.min) : i == last ? to_double(grid.max) : std::exp(lo + (hi - lo) * i / last);
      out.push_back(i == 0 ? grid.min : i == last ? grid.max : rational_from_decimal_double(v));
    }
  }
  return out;
}

namespace {

SweepRow solve_point(const SweepConfig& c, const BigRational& a, const BigRational& r2) {
  GameParams p;
  p.a = a;
  p.q1 = c.q1;
  p.r1 = c.r1;
  p.q2 = c.q2;
  p.r2 = r2;
  p.b1 = c.b1;
  p.b2 = c.b2;
  p.x0 = c.x0;
  const SolveReport rep = solve(p);
  SweepRow row;
  row.a = to_double(a);
  row.r2 = to_double(r2);
  row.delta = to_double(rep.delta);
  row.delta_sign = rep.delta_sign;
  row.n_real_roots_g = rep.real_roots_total;
  row.n_nash = static_cast<int>(rep.equilibria.size());
  for (const auto& e : rep.equilibria) row.equilibria.push_back({e.k1, e.k2, e.a_cl, e.j1, e.j2});
  check_row(row);
  return row;
}

struct Point {
  BigRational a, r2;
};

std::vector<Point> sweep_points(const SweepConfig& c) {
  std::vector<BigRational> r2s = c.r2_values;
  std::stable_sort(r2s.begin(), r2s.end());
  const auto as = a_values(c.a_grid);
  std::vector<Point> pts;
  pts.reserve(r2s.size() * as.size());
  for (const auto& r2 : r2s)
    for (const auto& a : as) pts.push_back({a, r2});
  return pts;
}

}  // namespace

void check_row(const SweepRow& row) {
  if (row.n_nash < 1 || row.n_nash > 3) throw ConsistencyError("sweep row has " + std::to_string(row.n_nash) + " equilibria");
  if (row.delta_sign < 0 && row.n_nash != 1) throw ConsistencyError("negative discriminant with more than one equilibrium");
  if (row.delta_sign == 0 && row.n_nash > 2) throw ConsistencyError("zero discriminant with three equilibria");
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  validate(config);
  const auto pts = sweep_points(config);
  std::vector<SweepRow> rows(pts.size());
  std::vector<std::string> errors(pts.size());
  const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = solve_point(config, pts[static_cast<std::size_t>(i)].a, pts[static_cast<std::size_t>(i)].r2);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw ConsistencyError(e);
  return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepConfig& config) {
  validate(config);
  std::vector<SweepRow> rows;
  for (const auto& p : sweep_points(config)) rows.push_back(solve_point(config, p.a, p.r2));
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round_presentation(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "a,r2,delta,delta_sign,n_real_roots_g,n_nash";
  for (int i = 1; i <= 3; ++i) os << ",k1_" << i << ",k2_" << i << ",j1_" << i << ",j2_" << i;
  os << "\n";
  for (const auto& r : rows) {
    os << format_number(r.a) << ',' << format_number(r.r2) << ',' << format_number(r.delta) << ',' << r.delta_sign
       << ',' << r.n_real_roots_g << ',' << r.n_nash;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i < r.equilibria.size()) {
        const auto& e = r.equilibria[i];
        os << ',' << format_number(e.k1) << ',' << format_number(e.k2) << ',' << format_number(e.j1) << ','
           << format_number(e.j2);
      } else {
        os << ",,,,";
      }
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : r.equilibria)
      eqs.push_back({{"k1", round_presentation(e.k1)},
                     {"k2", round_presentation(e.k2)},
                     {"a_cl", round_presentation(e.a_cl)},
                     {"j1", round_presentation(e.j1)},
                     {"j2", round_presentation(e.j2)}});
    out.push_back({{"a", round_presentation(r.a)},
                   {"r2", round_presentation(r.r2)},
                   {"delta", round_presentation(r.delta)},
                   {"delta_sign", r.delta_sign},
                   {"n_real_roots_g", r.n_real_roots_g},
                   {"n_nash", r.n_nash},
                   {"equilibria", eqs}});
  }
  return out;
}

double symlog(double delta) {
  if (delta == 0) return 0;
  const double m = std::log10(1.0 + std::abs(delta));
  return delta < 0 ? -m : m;
}

std::string sweep_svg(const std::vector<SweepRow>& rows) {
  static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  const double width = 820, panel_h = 300, left = 70, right = 150, top = 30, gap = 60;
  const double plot_w = width - left - right;
  const double height = top + 2 * panel_h + gap + 50;

  std::map<double, std::vector<const SweepRow*>> curves;
  double a_min = INFINITY, a_max = -INFINITY, y_min = 0, y_max = 0;
  for (const auto& r : rows) {
    curves[r.r2].push_back(&r);
    a_min = std::min(a_min, r.a);
    a_max = std::max(a_max, r.a);
    y_min = std::min(y_min, symlog(r.delta));
    y_max = std::max(y_max, symlog(r.delta));
  }
  if (rows.empty()) a_min = 0, a_max = 1;
  if (a_max == a_min) a_max = a_min + 1;
  if (y_max == y_min) y_max = y_min + 1;
  y_min = std::floor(y_min);
  y_max = std::ceil(y_max);

  auto px = [&](double a) { return left + (a - a_min) / (a_max - a_min) * plot_w; };
  auto py_delta = [&](double y) { return top + (y_max - y) / (y_max - y_min) * panel_h; };
  const double top2 = top + panel_h + gap;
  auto py_count = [&](double n) { return top2 + (3.5 - n) / 4.0 * panel_h; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(width) << "\" height=\""
     << format_number(height) << "\" viewBox=\"0 0 " << format_number(width) << ' ' << format_number(height)
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto frame = [&](double y0, const char* label) {
    os << "<rect x=\"" << format_number(left) << "\" y=\"" << format_number(y0) << "\" width=\"" << format_number(plot_w)
       << "\" height=\"" << format_number(panel_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << format_number(left - 55) << "\" y=\"" << format_number(y0 - 10) << "\">" << label << "</text>\n";
  };
  frame(top, "sign(D) log10(1+|D|)");
  frame(top2, "number of equilibria");

  for (int i = 0; i <= 4; ++i) {
    const double a = a_min + (a_max - a_min) * i / 4;
    for (double base : {top + panel_h, top2 + panel_h}) {
      os << "<line x1=\"" << format_number(px(a)) << "\" y1=\"" << format_number(base) << "\" x2=\""
         << format_number(px(a)) << "\" y2=\"" << format_number(base + 5) << "\" stroke=\"black\"/>\n";
      os << "<text x=\"" << format_number(px(a)) << "\" y=\"" << format_number(base + 18)
         << "\" text-anchor=\"middle\">" << format_number(round_presentation(a)) << "</text>\n";
    }
  }
  os << "<text x=\"" << format_number(left + plot_w / 2) << "\" y=\"" << format_number(height - 8)
     << "\" text-anchor=\"middle\">a</text>\n";
  const int step = std::max(1, static_cast<int>((y_max - y_min) / 8));
  for (int y = static_cast<int>(y_min); y <= static_cast<int>(y_max); y += step) {
    os << "<text x=\"" << format_number(left - 8) << "\" y=\"" << format_number(py_delta(y) + 4)
       << "\" text-anchor=\"end\">" << y << "</text>\n";
  }
  os << "<line x1=\"" << format_number(left) << "\" y1=\"" << format_number(py_delta(0)) << "\" x2=\""
     << format_number(left + plot_w) << "\" y2=\"" << format_number(py_delta(0))
     << "\" stroke=\"#999\" stroke-dasharray=\"2,3\"/>\n";
  for (int n = 0; n <= 3; ++n)
    os << "<text x=\"" << format_number(left - 8) << "\" y=\"" << format_number(py_count(n) + 4)
       << "\" text-anchor=\"end\">" << n << "</text>\n";

  std::size_t ci = 0;
  for (const auto& [r2, pts] : curves) {
    const char* color = kColors[ci % (sizeof(kColors) / sizeof(kColors[0]))];
    std::ostringstream d_line, n_line;
    for (const auto* r : pts) {
      d_line << format_number(px(r->a)) << ',' << format_number(py_delta(symlog(r->delta))) << ' ';
      n_line << format_number(px(r->a)) << ',' << format_number(py_count(r->n_nash)) << ' ';
    }
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << d_line.str() << "\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << n_line.str() << "\"/>\n";
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i]->delta_sign == pts[i - 1]->delta_sign) continue;
      const double x = px(0.5 * (pts[i]->a + pts[i - 1]->a));
      os << "<line x1=\"" << format_number(x) << "\" y1=\"" << format_number(top) << "\" x2=\"" << format_number(x)
         << "\" y2=\"" << format_number(top2 + panel_h) << "\" stroke=\"" << color
         << "\" stroke-dasharray=\"1,3\"/>\n";
    }
    const double ly = top + 20 + 18 * static_cast<double>(ci);
    os << "<line x1=\"" << format_number(left + plot_w + 15) << "\" y1=\"" << format_number(ly) << "\" x2=\""
       << format_number(left + plot_w + 40) << "\" y2=\"" << format_number(ly) << "\" stroke=\"" << color
       << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << format_number(left + plot_w + 45) << "\" y=\"" << format_number(ly + 4) << "\">r2 = "
       << format_number(r2) << "</text>\n";
    ++ci;
  }
  os << "</svg>\n";
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
}

}  // namespace lqnash
