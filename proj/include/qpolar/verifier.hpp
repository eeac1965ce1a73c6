#pragma once

// Identity catalog and per-configuration verification reports.
//
// Each catalog entry is a list of (lhs, rhs) matrix pairs; its deviation is
// the largest entrywise gap over the pairs. Entries that would pass
// vacuously on a zero implementation also carry a witness, a quantity that
// must stay at or above kSharpnessFloor.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qpolar/cmatrix.hpp"
#include "qpolar/fock_algebra.hpp"
#include "qpolar/qnumerics.hpp"

namespace qpolar {

inline constexpr double kSharpnessFloor = 1e-6;

inline constexpr std::array<std::string_view, 14> kCatalog{
    "eq1_ccr",          "eq3_truncation",        "eq5_nilpotency",  "eq6_decomposition",
    "eq9_gh",           "eq10_partial_isometry", "eq11_products",   "eq12_cyclic",
    "eq13_f_unitary",   "eq14_h_via_f",          "eq15_phase_orthonormal",
    "eq17_tilde_ccr",   "eq18_H_relations",      "eq19_polar"};

struct IdentityTerm {
  std::string label;
  CMatrix lhs;
  CMatrix rhs;
};

struct IdentityEvaluation {
  std::string name;
  std::vector<IdentityTerm> terms;
  std::optional<double> witness;

  [[nodiscard]] double deviation() const {
    double worst = 0.0;
    for (const auto& t : terms) worst = std::max(worst, max_abs_diff(t.lhs, t.rhs));
    return worst;
  }
};

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::optional<double> witness;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  AlgebraConfig config;
  std::vector<CheckResult> checks;
  bool overall_pass = false;

  [[nodiscard]] const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

[[nodiscard]] inline CheckResult make_check(std::string name, double deviation, double threshold,
                                            std::optional<double> witness = std::nullopt) {
  const bool ok = deviation <= threshold && (!witness || *witness >= kSharpnessFloor);
  return {std::move(name), deviation, threshold, ok, witness};
}

/// Evaluates both sides of every catalog identity on `ops`, using `product`
/// for every matrix product so that independent routes can share the
/// definitions.
template <class Product>
[[nodiscard]] std::vector<IdentityEvaluation> evaluate_catalog(const OperatorSet& ops,
                                                              Product&& product) {
  const AlgebraConfig& cfg = ops.config;
  const std::size_t d = ops.a.dim();
  const std::size_t last = d - 1;
  const auto id = CMatrix::identity(d);
  const auto zero = CMatrix::zeros(d);
  const CScalar q = root_power(1, cfg);
  const CScalar q_inv = root_power(-1, cfg);
  const CScalar denom_inv = 1.0 / (q - q_inv);

  auto mm = [&](const CMatrix& x, const CMatrix& y) -> CMatrix { return product(x, y); };
  auto power = [&](const CMatrix& x, int p) {
    auto out = id;
    for (int i = 0; i < p; ++i) out = mm(out, x);
    return out;
  };
  const auto f_dag = adjoint(ops.fourier);
  auto conj_f = [&](const CMatrix& x) { return mm(mm(ops.fourier, x), f_dag); };

  std::vector<IdentityEvaluation> out;
  out.reserve(kCatalog.size());

  // a a^dag - q a^dag a = q^-N, [N, a^dag] = a^dag, [N, a] = -a
  out.push_back({"eq1_ccr",
                 {{"a adag - q adag a = q^-N", mm(ops.a, ops.a_dag) - q * mm(ops.a_dag, ops.a),
                   ops.g_inv},
                  {"[N, adag] = adag", mm(ops.n_op, ops.a_dag) - mm(ops.a_dag, ops.n_op),
                   ops.a_dag},
                  {"[N, a] = -a", mm(ops.n_op, ops.a) - mm(ops.a, ops.n_op), -ops.a}},
                 std::nullopt});

  out.push_back({"eq3_truncation",
                 {{"adag |s><s| = 0", mm(ops.a_dag, dyad(last, last, d)), zero}},
                 std::nullopt});

  {
    const int s_plus_one = cfg.dim();
    const int index = nilpotency_index(cfg);
    IdentityEvaluation nil{"eq5_nilpotency",
                           {{"a^(s+1) = 0", power(ops.a, s_plus_one), zero},
                            {"adag^(s+1) = 0", power(ops.a_dag, s_plus_one), zero}},
                           std::nullopt};
    if (index != s_plus_one) {
      nil.terms.push_back({"a^p = 0 at the exact index", power(ops.a, index), zero});
      nil.terms.push_back({"adag^p = 0 at the exact index", power(ops.a_dag, index), zero});
    }
    nil.witness = std::min(max_abs(power(ops.a, index - 1)), max_abs(power(ops.a_dag, index - 1)));
    out.push_back(std::move(nil));
  }

  out.push_back({"eq6_decomposition",
                 {{"a = sqrt{g+1} hdag", ops.a, mm(ops.sqrt_brace_g1, ops.h_dag)},
                  {"a = hdag sqrt{g}", ops.a, mm(ops.h_dag, ops.sqrt_brace_g)},
                  {"adag = sqrt{g} h", ops.a_dag, mm(ops.sqrt_brace_g, ops.h)},
                  {"adag = h sqrt{g+1}", ops.a_dag, mm(ops.h, ops.sqrt_brace_g1)}},
                 std::nullopt});

  out.push_back({"eq9_gh",
                 {{"g h = q h g", mm(ops.g, ops.h), q * mm(ops.h, ops.g)},
                  {"g hdag = q^-1 hdag g", mm(ops.g, ops.h_dag), q_inv * mm(ops.h_dag, ops.g)}},
                 std::nullopt});

  {
    const auto h_hdag = mm(ops.h, ops.h_dag);
    out.push_back({"eq10_partial_isometry",
                   {{"h hdag = 1 - |0><0|", h_hdag, id - dyad(0, 0, d)},
                    {"hdag h = 1 - |s><s|", mm(ops.h_dag, ops.h), id - dyad(last, last, d)}},
                   max_abs_diff(h_hdag, id)});
  }

  out.push_back(
      {"eq11_products",
       {{"adag a = {g}", mm(ops.a_dag, ops.a), ops.brace_g},
        {"a adag = {g+1}", mm(ops.a, ops.a_dag), ops.brace_g1},
        {"{g} = (g - g^-1)/(q - q^-1)", denom_inv * (ops.g - ops.g_inv), ops.brace_g},
        {"{g+1} = (q g - q^-1 g^-1)/(q - q^-1)", denom_inv * (q * ops.g - q_inv * ops.g_inv),
         ops.brace_g1}},
       std::nullopt});

  out.push_back({"eq12_cyclic",
                 {{"g^(s+1) = 1", power(ops.g, cfg.dim()), id},
                  {"h^(s+1) = 0", power(ops.h, cfg.dim()), zero}},
                 std::nullopt});

  out.push_back({"eq13_f_unitary",
                 {{"F Fdag = 1", mm(ops.fourier, f_dag), id},
                  {"Fdag F = 1", mm(f_dag, ops.fourier), id}},
                 std::nullopt});

  out.push_back({"eq14_h_via_f",
                 {{"h = F g^-1 Fdag - |0><s|", conj_f(ops.g_inv) - dyad(0, last, d), ops.h},
                  {"hdag = F g Fdag - |s><0|", conj_f(ops.g) - dyad(last, 0, d), ops.h_dag}},
                 std::nullopt});

  {
    CMatrix gram(d);
    CMatrix completeness(d);
    std::vector<CVector> phases;
    phases.reserve(d);
    for (std::size_t m = 0; m < d; ++m) phases.push_back(column(ops.fourier, m));
    for (std::size_t m = 0; m < d; ++m) {
      for (std::size_t n = 0; n < d; ++n) gram(m, n) = inner(phases[m], phases[n]);
      completeness += outer(phases[m], phases[m]);
    }
    out.push_back({"eq15_phase_orthonormal",
                   {{"<phi_m|phi_n> = delta_mn", gram, id},
                    {"sum |phi_m><phi_m| = 1", completeness, id}},
                   std::nullopt});
  }

  out.push_back(
      {"eq17_tilde_ccr",
       {{"a~ a~dag - q a~dag a~ = H",
         mm(ops.a_tilde, ops.a_tilde_dag) - q * mm(ops.a_tilde_dag, ops.a_tilde), ops.big_h},
        {"q^-N~ = F q^-N Fdag = H", conj_f(ops.g_inv), ops.big_h},
        {"Fdag N~ F = N", mm(mm(f_dag, ops.n_tilde), ops.fourier), ops.n_op}},
       std::nullopt});

  out.push_back({"eq18_H_relations",
                 {{"g H = q H g", mm(ops.g, ops.big_h), q * mm(ops.big_h, ops.g)},
                  {"g Hdag = q^-1 Hdag g", mm(ops.g, ops.big_h_dag),
                   q_inv * mm(ops.big_h_dag, ops.g)},
                  {"H^(s+1) = 1", power(ops.big_h, cfg.dim()), id},
                  {"H Hdag = 1", mm(ops.big_h, ops.big_h_dag), id},
                  {"Hdag H = 1", mm(ops.big_h_dag, ops.big_h), id}},
                 std::nullopt});

  out.push_back(
      {"eq19_polar",
       {{"a~ = sqrt{Hdag+1} g^-1", ops.a_tilde, mm(ops.sqrt_brace_hdag1, ops.g_inv)},
        {"a~ = g^-1 sqrt{Hdag}", ops.a_tilde, mm(ops.g_inv, ops.sqrt_brace_hdag)},
        {"a~dag = sqrt{Hdag} g", ops.a_tilde_dag, mm(ops.sqrt_brace_hdag, ops.g)},
        {"a~dag = g sqrt{Hdag+1}", ops.a_tilde_dag, mm(ops.g, ops.sqrt_brace_hdag1)},
        {"sqrt{Hdag}^2 = {Hdag}", mm(ops.sqrt_brace_hdag, ops.sqrt_brace_hdag), ops.brace_hdag},
        {"sqrt{Hdag+1}^2 = {Hdag+1}", mm(ops.sqrt_brace_hdag1, ops.sqrt_brace_hdag1),
         ops.brace_hdag1},
        {"{Hdag} = (Hdag - H)/(q - q^-1)", denom_inv * (ops.big_h_dag - ops.big_h),
         ops.brace_hdag},
        {"{Hdag+1} = (q Hdag - q^-1 H)/(q - q^-1)",
         denom_inv * (q * ops.big_h_dag - q_inv * ops.big_h), ops.brace_hdag1},
        {"g^-1 g = 1", mm(ops.g_inv, adjoint(ops.g_inv)), id}},
       std::nullopt});

  return out;
}

[[nodiscard]] inline std::vector<IdentityEvaluation> evaluate_catalog(const OperatorSet& ops) {
  return evaluate_catalog(ops, [](const CMatrix& x, const CMatrix& y) { return mul(x, y); });
}

[[nodiscard]] inline VerificationReport run_all(const AlgebraConfig& cfg) {
  validate(cfg);
  const auto ops = build_operator_set(cfg);
  VerificationReport report{cfg, {}, true};
  for (const auto& eval : evaluate_catalog(ops)) {
    report.checks.push_back(make_check(eval.name, eval.deviation(), cfg.threshold(), eval.witness));
    report.overall_pass = report.overall_pass && report.checks.back().pass;
  }
  return report;
}

/// One independent report per s in [s_min, s_max], ordered by s.
[[nodiscard]] inline std::vector<VerificationReport> sweep(int s_min, int s_max, int k, double tol) {
  if (s_min < 2 || s_max < s_min) {
    throw ConfigError("sweep range requires 2 <= s_min <= s_max, got [" + std::to_string(s_min) +
                      ", " + std::to_string(s_max) + "]");
  }
  // Validate every configuration up front so a bad k fails before any work.
  for (int s = s_min; s <= s_max; ++s) validate(AlgebraConfig{s, k, tol});

  const auto count = static_cast<std::size_t>(s_max - s_min + 1);
  std::vector<VerificationReport> reports(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      reports[i] = run_all(AlgebraConfig{s_min + static_cast<int>(i), k, tol});
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, count);
  std::vector<std::future<void>> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return reports;
}

}  // namespace qpolar
