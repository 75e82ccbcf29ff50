#include <gtest/gtest.h>

#include <omp.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lqnash/cli.hpp"
#include "lqnash/report.hpp"
#include "lqnash/sweep.hpp"

namespace lqnash {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lqnash");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("lqnash_test_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_config(const nlohmann::json& doc, const std::string& name = "config.json") {
    const fs::path p = dir_ / name;
    std::ofstream(p) << doc.dump(2);
    return p;
  }

  nlohmann::json figure_config(int count, const std::vector<double>& r2) {
    return {{"q1", 0.5},
            {"r1", 1},
            {"q2", 1},
            {"a_grid", {{"min", 0.0001}, {"max", 4}, {"count", count}, {"spacing", "linear"}}},
            {"r2_values", r2},
            {"outputs", {{"csv", (dir_ / "out.csv").string()}, {"svg", (dir_ / "out.svg").string()},
                         {"json", (dir_ / "out.json").string()}}}};
  }

  fs::path dir_;
};

constexpr const char* kHeader =
    "a,r2,delta,delta_sign,n_real_roots_g,n_nash,k1_1,k2_1,j1_1,j2_1,k1_2,k2_2,j1_2,j2_2,k1_3,k2_3,j1_3,j2_3";

TEST(Solve, JsonDocument) {
  const CliResult r = cli({"solve", "--a", "1", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["n_nash"], 1);
  EXPECT_NEAR(doc["equilibria"][0]["k1"].get<double>(), 0.35542, 1e-5);
  EXPECT_NEAR(doc["equilibria"][0]["k2"].get<double>(), 0.35542, 1e-5);
  EXPECT_EQ(doc["delta_exact"], "-5056");
  EXPECT_EQ(doc["delta_sign"], -1);
  EXPECT_TRUE(doc["theorem_flags"]["existence"].get<bool>());
}

TEST(Solve, JsonRoundTripsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"solve", "--a", "1", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1"},
           {"solve", "--a", "3.9", "--q1", "0.5", "--q2", "1", "--r1", "1", "--r2", "2"},
           {"solve", "--a", "-1.7", "--q1", "0.013", "--q2", "77", "--r1", "3/7", "--r2", "0.02", "--b1", "-2"},
           {"solve", "--a", "0", "--q1", "1", "--q2", "2", "--r1", "1", "--r2", "1"}}) {
    const CliResult r = cli(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string again = nlohmann::json::parse(r.out).dump(2) + "\n";
    EXPECT_EQ(again, r.out);
  }
}

TEST(Solve, TrivialGame) {
  const CliResult r = cli({"solve", "--a", "0", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["trivial"].get<bool>());
  EXPECT_EQ(doc["equilibria"][0]["k1"], 0.0);
  EXPECT_EQ(doc["equilibria"][0]["k2"], 0.0);
}

TEST(Solve, InvalidInputs) {
  CliResult r = cli({"solve", "--a", "1", "--q1", "-1", "--q2", "1", "--r1", "1", "--r2", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("q1 must be > 0"), std::string::npos);
  r = cli({"solve", "--a", "1", "--q1", "1", "--q2", "1", "--r1", "1"});
  EXPECT_EQ(r.code, 2);
  r = cli({"solve", "--a", "x", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1"});
  EXPECT_EQ(r.code, 2);
  r = cli({"solve", "--a", "1", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1", "--b2", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("b2 must be nonzero"), std::string::npos);
  r = cli({"solve", "--a", "1", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1", "--format", "xml"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(cli({}).code, 2);
}

TEST(Solve, TableFormat) {
  const CliResult r = cli({"solve", "--a", "3.9", "--q1", "0.5", "--q2", "1", "--r1", "1", "--r2", "2", "--format", "table"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("equilibria = 3"), std::string::npos);
}

TEST(Verify, ExitCodes) {
  CliResult r = cli({"verify", "--a", "1", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("ALL AGREE"), std::string::npos);
  r = cli({"verify", "--a", "3.9", "--q1", "0.5", "--q2", "1", "--r1", "1", "--r2", "2", "--grid-n", "256"});
  EXPECT_EQ(r.code, 0) << r.out;
  r = cli({"--seed", "9", "verify", "--a", "1", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1"});
  EXPECT_EQ(r.code, 0) << r.out;
  r = cli({"verify", "--a", "1", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1", "--fault-negate-state-cost"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("disagreement:"), std::string::npos);
}

TEST(GroebnerCheck, Examples) {
  CliResult r = cli({"groebner-check", "--a", "1", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("k2^5 - 3/2*k2^4 - k2^2 - k2 + 1/2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  r = cli({"groebner-check", "--a", "7/2", "--q1", "1/2", "--q2", "1", "--r1", "1", "--r2", "2"});
  EXPECT_EQ(r.code, 0);
  r = cli({"groebner-check", "--a", "0.1", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1"});
  EXPECT_EQ(r.code, 0);
  r = cli({"groebner-check", "--a", "pi", "--q1", "1", "--q2", "1", "--r1", "1", "--r2", "1"});
  EXPECT_EQ(r.code, 2);
}

TEST_F(TempDir, SweepWritesAllOutputs) {
  const CliResult r = cli({"--quiet", "sweep", write_config(figure_config(40, {2, 1})).string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const std::string csv = slurp(dir_ / "out.csv");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kHeader);
  int rows = 0;
  double last_r2 = -1, last_a = -1;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 17);
    const double a = std::stod(line.substr(0, line.find(',')));
    const double r2 = std::stod(line.substr(line.find(',') + 1));
    if (r2 == last_r2) EXPECT_GT(a, last_a);
    else EXPECT_GT(r2, last_r2);
    last_r2 = r2;
    last_a = a;
  }
  EXPECT_EQ(rows, 80);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(slurp(dir_ / "out.json")).size(), 80u);
  const std::string svg = slurp(dir_ / "out.svg");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(svg.find("href"), std::string::npos);
  EXPECT_EQ(svg.find("<image"), std::string::npos);
  std::size_t polylines = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++polylines;
  EXPECT_EQ(polylines, 4u);
  for (const auto& entry : fs::directory_iterator(dir_)) EXPECT_NE(entry.path().extension(), ".tmp");
}

TEST_F(TempDir, SweepIsDeterministicAcrossThreads) {
  const auto cfg = write_config(figure_config(60, {0.75, 1, 2, 4}));
  std::string first;
  for (const char* threads : {"1", "2", "3", "4"}) {
    ASSERT_EQ(cli({"--threads", threads, "--quiet", "sweep", cfg.string()}).code, 0);
    const std::string csv = slurp(dir_ / "out.csv");
    if (first.empty()) first = csv;
    EXPECT_EQ(csv, first) << threads;
  }
}

TEST_F(TempDir, SweepRejectsBadConfigWithoutWriting) {
  auto bad = figure_config(10, {1});
  bad["a_grid"]["min"] = 0;
  EXPECT_EQ(cli({"sweep", write_config(bad).string()}).code, 2);
  bad = figure_config(10, {});
  EXPECT_EQ(cli({"sweep", write_config(bad).string()}).code, 2);
  bad = figure_config(10, {1, -2});
  EXPECT_EQ(cli({"sweep", write_config(bad).string()}).code, 2);
  bad = figure_config(10, {1});
  bad["a_grid"]["spacing"] = "cubic";
  EXPECT_EQ(cli({"sweep", write_config(bad).string()}).code, 2);
  bad = figure_config(10, {1});
  bad.erase("q1");
  EXPECT_EQ(cli({"sweep", write_config(bad).string()}).code, 2);
  {
    std::ofstream(dir_ / "broken.json") << "{ not json";
  }
  EXPECT_EQ(cli({"sweep", (dir_ / "broken.json").string()}).code, 2);
  EXPECT_EQ(cli({"sweep", (dir_ / "missing.json").string()}).code, 2);
  EXPECT_FALSE(fs::exists(dir_ / "out.csv"));
  EXPECT_FALSE(fs::exists(dir_ / "out.svg"));
}

TEST_F(TempDir, SinglePointAllOnes) {
  nlohmann::json doc = {{"q1", 1},
                        {"r1", 1},
                        {"q2", 1},
                        {"a_grid", {{"min", 1}, {"max", 1}, {"count", 1}}},
                        {"r2_values", {1}},
                        {"outputs", {{"csv", (dir_ / "one.csv").string()}}}};
  ASSERT_EQ(cli({"--quiet", "sweep", write_config(doc).string()}).code, 0);
  const std::string csv = slurp(dir_ / "one.csv");
  EXPECT_EQ(csv.substr(csv.find('\n') + 1),
            "1,1,-5056,-1,3,1,0.355415726776,0.355415726776,1.22909538794,1.22909538794,,,,,,,,\n");
}

TEST(SweepConfig, GridValues) {
  AGrid lin;
  lin.min = BigRational(1, 10000);
  lin.max = 4;
  lin.count = 5;
  const auto v = a_values(lin);
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v.front(), BigRational(1, 10000));
  EXPECT_EQ(v.back(), 4);
  EXPECT_EQ(v[2], (BigRational(1, 10000) + 4) / 2);
  AGrid lg = lin;
  lg.spacing = AGrid::Spacing::Log;
  lg.count = 3;
  const auto w = a_values(lg);
  EXPECT_EQ(w.front(), BigRational(1, 10000));
  EXPECT_EQ(w.back(), 4);
  EXPECT_NEAR(to_double(w[1]), std::sqrt(4e-4), 1e-12);
}

TEST(SweepRows, ParallelMatchesSerial) {
  SweepConfig c;
  c.q1 = BigRational(1, 2);
  c.a_grid.min = BigRational(1, 10000);
  c.a_grid.max = 4;
  c.a_grid.count = 50;
  c.r2_values = {BigRational(4), BigRational(3, 4), BigRational(1)};
  const auto serial = run_sweep_serial(c);
  EXPECT_EQ(serial.size(), 150u);
  EXPECT_EQ(serial.front().r2, 0.75);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    EXPECT_EQ(sweep_csv(run_sweep(c)), sweep_csv(serial));
  }
}

TEST(SweepRows, InvariantsChecked) {
  SweepRow row;
  row.n_nash = 3;
  row.delta_sign = -1;
  EXPECT_THROW(check_row(row), ConsistencyError);
  row.delta_sign = 0;
  EXPECT_THROW(check_row(row), ConsistencyError);
  row.n_nash = 0;
  row.delta_sign = 1;
  EXPECT_THROW(check_row(row), ConsistencyError);
  row.n_nash = 2;
  row.delta_sign = 0;
  EXPECT_NO_THROW(check_row(row));
}

TEST(Presentation, SymlogAndFormatting) {
  EXPECT_EQ(symlog(0), 0);
  EXPECT_DOUBLE_EQ(symlog(9), 1);
  EXPECT_DOUBLE_EQ(symlog(-99), -2);
  EXPECT_EQ(format_number(1.0 / 3), "0.333333333333");
  EXPECT_EQ(format_number(1e20), "1e+20");
  EXPECT_EQ(round_presentation(1.0 / 3), 0.333333333333);
}

#ifdef LQNASH_CLI_PATH
int run_binary(const std::string& args) {
  const int status = std::system((std::string(LQNASH_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_binary("solve --a 1 --q1 1 --q2 1 --r1 1 --r2 1"), 0);
  EXPECT_EQ(run_binary("solve --a 1 --q1 -1 --q2 1 --r1 1 --r2 1"), 2);
  EXPECT_EQ(run_binary("groebner-check --a pi --q1 1 --q2 1 --r1 1 --r2 1"), 2);
  EXPECT_EQ(run_binary("verify --a 1 --q1 1 --q2 1 --r1 1 --r2 1 --fault-negate-state-cost"), 4);
  EXPECT_EQ(run_binary("--help"), 0);
}
#endif

}  // namespace
}  // namespace lqnash
