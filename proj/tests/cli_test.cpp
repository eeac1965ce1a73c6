#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_harness.hpp"
#include "gtest/gtest.h"
#include "qpolar/fock_algebra.hpp"
#include "qpolar/json_io.hpp"

namespace qpolar {
namespace {

using testing::run_cli;
using testing::scratch_dir;

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

TEST(CliBuild, BigHToStdout) {
  const auto run = run_cli("build --s 2 --op bigh");
  ASSERT_EQ(run.exit_code, 0);
  const auto m = matrix_from_json(nlohmann::json::parse(run.out));
  EXPECT_EQ(m, (CMatrix{{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}));
}

TEST(CliBuild, NumberOperatorToFile) {
  const auto path = scratch_dir() / "n.json";
  const auto run = run_cli("build --s 2 --op n --out " + path.string());
  ASSERT_EQ(run.exit_code, 0);
  EXPECT_TRUE(run.out.empty());
  EXPECT_EQ(matrix_from_json(read_json(path)), diagonal(std::vector<CScalar>{0.0, 1.0, 2.0}));
}

TEST(CliBuild, EveryOperatorRoundTripsBitExact) {
  const auto cfg = make_config(5);
  const auto ops = build_operator_set(cfg);
  for (const auto name : kOperatorNames) {
    const auto run = run_cli("build --s 5 --op " + std::string(name));
    ASSERT_EQ(run.exit_code, 0) << name;
    EXPECT_EQ(matrix_from_json(nlohmann::json::parse(run.out)), *find_operator(ops, name)) << name;
  }
}

TEST(CliBuild, ErrorCodes) {
  EXPECT_EQ(run_cli("build --s 1 --op a").exit_code, 2);
  EXPECT_EQ(run_cli("build --s 3 --k 2 --op a").exit_code, 2);
  EXPECT_EQ(run_cli("build --s 2 --op nonsense").exit_code, 2);
  EXPECT_EQ(run_cli("build --s 2").exit_code, 2);
  EXPECT_EQ(run_cli("build --s two --op a").exit_code, 2);
  EXPECT_EQ(run_cli("build --s 2 --op a --out /nonexistent-dir/x.json").exit_code, 3);
}

TEST(CliVerify, PassesAndReportsFourteenChecks) {
  const auto run = run_cli("verify --s 5 --json");
  ASSERT_EQ(run.exit_code, 0);
  const auto report = report_from_json(nlohmann::json::parse(run.out));
  EXPECT_EQ(report.checks.size(), 14U);
  EXPECT_TRUE(report.overall_pass);
  EXPECT_EQ(report.config.k, 1);
  EXPECT_EQ(report.config.tol, 1e-9);

  const auto text = run_cli("verify --s 5");
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_NE(text.out.find("overall: PASS (14/14)"), std::string::npos);
}

TEST(CliVerify, ErrorCodes) {
  EXPECT_EQ(run_cli("verify --s 5 --tol 1e-30").exit_code, 1);
  EXPECT_EQ(run_cli("verify --s 0").exit_code, 2);
  EXPECT_EQ(run_cli("verify --s 5 --tol -1").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}

TEST(CliSweep, Summary) {
  const auto run = run_cli("sweep --s-min 2 --s-max 32");
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_NE(run.out.find("passed 31/31"), std::string::npos);
  EXPECT_EQ(run_cli("sweep --s-min 10 --s-max 9").exit_code, 2);
  EXPECT_EQ(run_cli("sweep --s-min 2 --s-max 4 --tol 1e-30").exit_code, 1);
}

TEST(CliSweep, JsonArray) {
  const auto run = run_cli("sweep --s-min 2 --s-max 2 --json");
  ASSERT_EQ(run.exit_code, 0);
  const auto arr = nlohmann::json::parse(run.out);
  ASSERT_TRUE(arr.is_array());
  EXPECT_EQ(arr.size(), 1U);
  EXPECT_EQ(report_from_json(arr[0]), run_all(make_config(2)));
}

TEST(CliSpectrum, ClosedForms) {
  const auto brace = run_cli("spectrum --s 2 --op braceHdag");
  ASSERT_EQ(brace.exit_code, 0);
  std::istringstream in(brace.out);
  double x0, x1, x2;
  in >> x0 >> x1 >> x2;
  EXPECT_NEAR(x0, 0.0, 1e-15);
  EXPECT_NEAR(x1, 1.0, 1e-15);
  EXPECT_NEAR(x2, -1.0, 1e-15);

  const auto g = run_cli("spectrum --s 2 --op g --json");
  ASSERT_EQ(g.exit_code, 0);
  const auto arr = nlohmann::json::parse(g.out);
  ASSERT_EQ(arr.size(), 3U);
  EXPECT_NEAR(arr[1][0].get<double>(), -0.5, 1e-15);
  EXPECT_NEAR(arr[2][1].get<double>(), -std::sqrt(3.0) / 2.0, 1e-15);

  EXPECT_EQ(run_cli("spectrum --s 2 --op a").exit_code, 2);
}

TEST(CliPhaseStates, OrthonormalOutput) {
  const auto path = scratch_dir() / "phases.json";
  ASSERT_EQ(run_cli("phase-states --s 2 --out " + path.string()).exit_code, 0);
  const auto arr = read_json(path);
  ASSERT_EQ(arr.size(), 3U);
  std::vector<CVector> phi;
  for (const auto& v : arr) phi.push_back(vector_from_json(v));
  for (const auto& z : phi[0].entries()) EXPECT_NEAR(std::abs(z - 1.0 / std::sqrt(3.0)), 0.0, 1e-15);
  for (std::size_t m = 0; m < 3; ++m) {
    for (std::size_t n = 0; n < 3; ++n) {
      EXPECT_LE(std::abs(inner(phi[m], phi[n]) - (m == n ? 1.0 : 0.0)), 1e-12);
    }
  }
  EXPECT_EQ(run_cli("phase-states --s 2 --out /nonexistent-dir/p.json").exit_code, 3);
}

}  // namespace
}  // namespace qpolar
