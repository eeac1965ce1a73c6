// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli_harness.hpp"
#include "qpolar/fock_algebra.hpp"
#include "qpolar/json_io.hpp"
#include "qpolar/oracle.hpp"
#include "qpolar/verifier.hpp"

namespace {

using namespace qpolar;

constexpr int kSweepMin = 2;
constexpr int kSweepMax = 32;
constexpr double kBaseTol = 1e-9;
constexpr double kTight = 1e-12;
constexpr double kNilpotentFloor = 1e-6;
constexpr double kRuntimeBudgetSeconds = 10.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) {
      detail = why;
    } else if (detail.size() < 400) {
      detail += "; " + why;
    }
    pass = false;
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome identity_suite() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto reports = sweep(kSweepMin, kSweepMax, 1, kBaseTol);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double worst_ratio = 0.0;
  for (const auto& r : reports) {
    const double bound = kBaseTol * (r.config.s + 1);
    if (r.checks.size() != kCatalog.size()) o.fail("s=" + std::to_string(r.config.s) + " incomplete catalog");
    for (const auto& c : r.checks) {
      worst_ratio = std::max(worst_ratio, c.deviation / bound);
      if (!c.pass || c.deviation > bound) {
        o.fail("s=" + std::to_string(r.config.s) + " " + c.name + " dev=" + fmt(c.deviation));
      }
    }
  }
  if (seconds >= kRuntimeBudgetSeconds) o.fail("runtime " + fmt(seconds) + " s");
  if (o.pass) {
    o.detail = std::to_string(reports.size()) + " configs x 14 checks, worst dev/bound " +
               fmt(worst_ratio) + ", " + fmt(seconds) + " s";
  }
  return o;
}

Outcome nilpotency_sharpness() {
  Outcome o;
  std::vector<int> vanishing;
  for (int s = kSweepMin; s <= kSweepMax; ++s) {
    const auto cfg = make_config(s);
    const auto a = build_annihilation(cfg);
    const double top = max_abs(mat_pow(a, static_cast<unsigned>(s + 1)));
    const double below = max_abs(mat_pow(a, static_cast<unsigned>(s)));
    if (top > kTight) o.fail("s=" + std::to_string(s) + " |a^(s+1)|=" + fmt(top));
    if (below < kNilpotentFloor) vanishing.push_back(s);
  }
  if (!vanishing.empty()) {
    std::string list;
    for (const int s : vanishing) list += (list.empty() ? "" : ",") + std::to_string(s);
    o.fail("|a^s| < 1e-6 for s in {" + list +
           "}: [(s+1)/2] = 0 exactly when s+1 is even, so a^s vanishes");
  }
  if (o.pass) o.detail = "a^(s+1) = 0 and |a^s| >= 1e-6 for all s";
  return o;
}

Outcome fourier_polar_core() {
  Outcome o;
  double worst = 0.0;
  for (int s = kSweepMin; s <= kSweepMax; ++s) {
    const auto cfg = make_config(s);
    const auto f = build_fourier(cfg);
    const auto big_h = build_big_h(cfg);
    const double dev = max_abs_diff(big_h, mul(mul(f, build_g_inverse(cfg)), adjoint(f)));
    worst = std::max(worst, dev);
    const auto tag = "s=" + std::to_string(s);
    if (dev > kTight) o.fail(tag + " H vs F g^-1 F^dag " + fmt(dev));
    if (!is_unitary(f, kTight)) o.fail(tag + " F not unitary");
    if (!is_unitary(big_h, kTight)) o.fail(tag + " H not unitary");
    if (is_unitary(build_h(cfg), kTight)) o.fail(tag + " h unitary");
  }
  if (o.pass) o.detail = "max |H - F g^-1 F^dag| = " + fmt(worst);
  return o;
}

Outcome polar_decomposition() {
  Outcome o;
  double worst_ratio = 0.0;
  for (int s = kSweepMin; s <= kSweepMax; ++s) {
    const auto cfg = make_config(s);
    const double bound = kBaseTol * (s + 1);
    const auto f = build_fourier(cfg);
    const auto f_dag = adjoint(f);
    const auto a_tilde = mul(mul(f, build_annihilation(cfg)), f_dag);
    const auto a_tilde_dag = mul(mul(f, build_creation(cfg)), f_dag);
    const auto g = build_g(cfg);
    const auto g_inv = build_g_inverse(cfg);
    const auto roots = sqrt_brace_big_h(cfg);
    const double devs[] = {
        max_abs_diff(a_tilde, mul(roots.brace_plus_one, g_inv)),
        max_abs_diff(a_tilde, mul(g_inv, roots.brace)),
        max_abs_diff(a_tilde_dag, mul(roots.brace, g)),
        max_abs_diff(a_tilde_dag, mul(g, roots.brace_plus_one)),
    };
    for (const double d : devs) {
      worst_ratio = std::max(worst_ratio, d / bound);
      if (d > bound) o.fail("s=" + std::to_string(s) + " dev=" + fmt(d));
    }
  }
  if (o.pass) o.detail = "four factorizations, worst dev/bound " + fmt(worst_ratio);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  double worst = 0.0;
  std::size_t count = 0;
  for (int s = kSweepMin; s <= oracle::kMaxOracleCutoff; ++s) {
    for (const auto& r : oracle::brute_force_oracle(make_config(s))) {
      ++count;
      worst = std::max(worst, r.deviation);
      if (r.deviation > kTight) o.fail("s=" + std::to_string(s) + " " + r.name + " " + fmt(r.deviation));
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " comparisons, worst " + fmt(worst);
  return o;
}

Outcome scalar_layer() {
  Outcome o;
  double worst = 0.0;
  for (int s = 2; s <= 64; ++s) {
    for (int k = -s; k <= s; ++k) {
      if (std::gcd(k, s + 1) != 1) continue;
      const auto cfg = make_config(s, k);
      const auto q = std::polar(1.0, 2.0 * std::numbers::pi * k / (s + 1));
      for (int x = 0; x <= s + 1; ++x) {
        const double quotient = ((std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q)).real();
        const double dev = std::abs(q_number(x, cfg) - quotient);
        worst = std::max(worst, dev);
        if (dev > kTight) o.fail("s=" + std::to_string(s) + " k=" + std::to_string(k) + " x=" + std::to_string(x));
      }
      if (std::abs(q_number(s + 1, cfg)) > kTight) o.fail("[s+1] != 0 at s=" + std::to_string(s));
    }
  }
  if (o.pass) o.detail = "max |sine ratio - quotient| = " + fmt(worst);
  return o;
}

Outcome cli_contract() {
  using testing::run_cli;
  Outcome o;
  const struct {
    const char* args;
    int expected;
  } cases[] = {
      {"build --s 2 --op bigh", 0},
      {"build --s 2 --op n", 0},
      {"build --s 1 --op a", 2},
      {"build --s 2 --op bogus", 2},
      {"build --s 2 --op a --out /nonexistent-dir/a.json", 3},
      {"verify --s 5", 0},
      {"verify --s 5 --tol 1e-30", 1},
      {"verify --s 0", 2},
      {"sweep --s-min 2 --s-max 32", 0},
      {"sweep --s-min 10 --s-max 9", 2},
      {"sweep --s-min 2 --s-max 2 --json", 0},
      {"spectrum --s 2 --op braceHdag", 0},
      {"spectrum --s 2 --op g", 0},
      {"spectrum --s 2 --op a", 2},
      {"phase-states --s 2", 0},
      {"phase-states --s 2 --out /nonexistent-dir/p.json", 3},
  };
  for (const auto& c : cases) {
    const auto run = run_cli(c.args);
    if (run.exit_code != c.expected) {
      o.fail(std::string(c.args) + " -> " + std::to_string(run.exit_code));
    }
  }

  const auto sweep_text = run_cli("sweep --s-min 2 --s-max 32");
  if (sweep_text.out.find("passed 31/31") == std::string::npos) o.fail("sweep summary line");
  const auto sweep_json = run_cli("sweep --s-min 2 --s-max 2 --json");
  if (nlohmann::json::parse(sweep_json.out).size() != 1) o.fail("sweep --json length");

  for (const int s : {2, 7}) {
    const auto ops = build_operator_set(make_config(s));
    for (const auto name : kOperatorNames) {
      const auto run = run_cli("build --s " + std::to_string(s) + " --op " + std::string(name));
      const auto parsed = matrix_from_json(nlohmann::json::parse(run.out));
      if (!(parsed == *find_operator(ops, name))) o.fail("round trip " + std::string(name));
      if (!(matrix_from_json(nlohmann::json::parse(to_json(parsed).dump())) == parsed)) {
        o.fail("reserialize " + std::string(name));
      }
    }
  }

  // verify/sweep never write files: the scratch directory stays empty.
  const auto dir = testing::scratch_dir() / "no_writes";
  std::filesystem::create_directories(dir);
  const auto here = std::filesystem::current_path();
  std::filesystem::current_path(dir);
  run_cli("verify --s 3 --json");
  run_cli("sweep --s-min 2 --s-max 3");
  std::filesystem::current_path(here);
  if (!std::filesystem::is_empty(dir)) o.fail("verify/sweep wrote files");

  if (o.pass) o.detail = "exit codes, summary line and bit-exact JSON round trip";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 identity suite s=2..32, dev <= 1e-9(s+1), < 10 s", identity_suite},
      {"AC2 nilpotency sharpness |a^(s+1)| <= 1e-12, |a^s| >= 1e-6", nilpotency_sharpness},
      {"AC3 H = F g^-1 F^dag, F/H unitary, h not unitary @1e-12", fourier_polar_core},
      {"AC4 polar factorizations of a~, a~dag @1e-9(s+1)", polar_decomposition},
      {"AC5 brute-force oracle agreement s=2..8 @1e-12", oracle_equivalence},
      {"AC6 scalar layer sine ratio vs quotient, s<=64 @1e-12", scalar_layer},
      {"AC7 CLI exit codes and JSON round trip", cli_contract},
  };
  int failures = 0;
  for (const auto& [label, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s -- %s\n", o.pass ? "PASS" : "FAIL", label, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
