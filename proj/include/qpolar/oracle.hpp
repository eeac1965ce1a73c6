#pragma once

// Brute-force cross-check of the closed-form operator builders.
//
// Everything here is rebuilt from dyad sums with naively accumulated powers
// of q, complex-quotient q-numbers and dot-product matrix multiplication.
// Functions of H come from phase-state projector sums rather than Fourier
// conjugation. Only the square-root branch is shared with the main route.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "qpolar/cmatrix.hpp"
#include "qpolar/fock_algebra.hpp"
#include "qpolar/qnumerics.hpp"
#include "qpolar/verifier.hpp"

namespace qpolar::oracle {

inline constexpr int kMaxOracleCutoff = 8;
inline constexpr double kAgreementThreshold = 1e-12;

/// Row-times-column product, no reordering and no zero skipping.
[[nodiscard]] inline CMatrix naive_product(const CMatrix& x, const CMatrix& y) {
  CMatrix::require_same_dim(x, y);
  const std::size_t d = x.dim();
  CMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      CScalar acc{};
      for (std::size_t l = 0; l < d; ++l) acc += x(i, l) * y(l, j);
      out(i, j) = acc;
    }
  }
  return out;
}

/// q^n by repeated multiplication of exp(2 pi i k/(s+1)); negative n uses
/// the conjugate.
[[nodiscard]] inline CScalar naive_power(int n, const AlgebraConfig& cfg) {
  const CScalar q = std::exp(CScalar(0.0, 2.0 * std::numbers::pi * cfg.k / cfg.dim()));
  const CScalar base = n >= 0 ? q : std::conj(q);
  CScalar acc{1.0, 0.0};
  for (int i = 0; i < std::abs(n); ++i) acc *= base;
  return acc;
}

/// (q^x - q^-x)/(q - q^-1). The zero set {x : q^(2x) = 1} is decided in
/// integer arithmetic; elsewhere the real part of the complex quotient.
[[nodiscard]] inline double quotient_q_number(int x, const AlgebraConfig& cfg) {
  const long long m = cfg.dim();
  if ((2LL * cfg.k * x) % m == 0) return 0.0;
  const CScalar num = naive_power(x, cfg) - naive_power(-x, cfg);
  const CScalar den = naive_power(1, cfg) - naive_power(-1, cfg);
  return (num / den).real();
}

[[nodiscard]] inline OperatorSet build_naive_operator_set(const AlgebraConfig& cfg) {
  validate(cfg);
  if (cfg.s > kMaxOracleCutoff) {
    throw ConfigError("brute-force oracle is limited to s <= " + std::to_string(kMaxOracleCutoff));
  }
  const auto d = static_cast<std::size_t>(cfg.dim());
  const int s = cfg.s;
  auto at = [](int i) { return static_cast<std::size_t>(i); };
  auto root = [&](int x) { return principal_sqrt(quotient_q_number(x, cfg)); };
  const CScalar q = naive_power(1, cfg);
  const CScalar q_inv = naive_power(-1, cfg);
  const CScalar denom_inv = 1.0 / (q - q_inv);

  CMatrix a(d), a_dag(d), n_op(d), g(d), g_inv(d), h(d), h_dag(d), fourier(d), big_h(d);
  CMatrix sqrt_g(d), sqrt_g1(d);
  for (int n = 1; n <= s; ++n) a += root(n) * dyad(at(n - 1), at(n), d);
  for (int n = 0; n < s; ++n) a_dag += root(n + 1) * dyad(at(n + 1), at(n), d);
  for (int n = 0; n <= s; ++n) {
    n_op += CScalar(n, 0.0) * dyad(at(n), at(n), d);
    g += naive_power(n, cfg) * dyad(at(n), at(n), d);
    g_inv += naive_power(-n, cfg) * dyad(at(n), at(n), d);
    sqrt_g += root(n) * dyad(at(n), at(n), d);
    sqrt_g1 += root(n + 1) * dyad(at(n), at(n), d);
    big_h += dyad(at((n + 1) % (s + 1)), at(n), d);
  }
  for (int n = 0; n < s; ++n) {
    h += dyad(at(n + 1), at(n), d);
    h_dag += dyad(at(n), at(n + 1), d);
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int m = 0; m <= s; ++m) {
    for (int n = 0; n <= s; ++n) fourier += (norm * naive_power(m * n, cfg)) * dyad(at(m), at(n), d);
  }
  CMatrix big_h_dag(d);
  for (int n = 0; n <= s; ++n) big_h_dag += dyad(at(n), at((n + 1) % (s + 1)), d);

  std::vector<CVector> phi;
  for (int m = 0; m <= s; ++m) phi.push_back(column(fourier, at(m)));

  CMatrix a_tilde(d), a_tilde_dag(d), n_tilde(d), sqrt_hdag(d), sqrt_hdag1(d);
  for (int m = 1; m <= s; ++m) a_tilde += root(m) * outer(phi[at(m - 1)], phi[at(m)]);
  for (int m = 0; m < s; ++m) a_tilde_dag += root(m + 1) * outer(phi[at(m + 1)], phi[at(m)]);
  for (int m = 0; m <= s; ++m) {
    const auto projector = outer(phi[at(m)], phi[at(m)]);
    n_tilde += CScalar(m, 0.0) * projector;
    sqrt_hdag += root(m) * projector;
    sqrt_hdag1 += root(m + 1) * projector;
  }

  auto brace_g = denom_inv * (g - g_inv);
  auto brace_g1 = denom_inv * (q * g - q_inv * g_inv);
  auto brace_hdag = denom_inv * (big_h_dag - big_h);
  auto brace_hdag1 = denom_inv * (q * big_h_dag - q_inv * big_h);

  return OperatorSet{cfg,
                     std::move(a),
                     std::move(a_dag),
                     std::move(n_op),
                     std::move(g),
                     std::move(g_inv),
                     std::move(h),
                     std::move(h_dag),
                     std::move(brace_g),
                     std::move(brace_g1),
                     std::move(sqrt_g),
                     std::move(sqrt_g1),
                     std::move(fourier),
                     std::move(big_h),
                     std::move(big_h_dag),
                     std::move(a_tilde),
                     std::move(a_tilde_dag),
                     std::move(n_tilde),
                     std::move(brace_hdag),
                     std::move(brace_hdag1),
                     std::move(sqrt_hdag),
                     std::move(sqrt_hdag1)};
}

/// Agreement between the brute-force and closed-form routes: one result per
/// exported operator ("op:<name>") and one per catalog entry ("check:<name>",
/// covering both sides of every term and the witness).
[[nodiscard]] inline std::vector<CheckResult> brute_force_oracle(const AlgebraConfig& cfg) {
  const auto naive = build_naive_operator_set(cfg);
  const auto closed = qpolar::build_operator_set(cfg);

  std::vector<CheckResult> out;
  for (const auto name : kOperatorNames) {
    const double dev = max_abs_diff(*find_operator(naive, name), *find_operator(closed, name));
    out.push_back(make_check("op:" + std::string(name), dev, kAgreementThreshold));
  }
  // Internal building blocks that never leave the library but feed the checks.
  struct Member {
    const char* name;
    CMatrix OperatorSet::*field;
  };
  constexpr std::array<Member, 6> internals{{{"g_inv", &OperatorSet::g_inv},
                                            {"big_h_dag", &OperatorSet::big_h_dag},
                                            {"brace_g", &OperatorSet::brace_g},
                                            {"brace_g1", &OperatorSet::brace_g1},
                                            {"sqrt_brace_g", &OperatorSet::sqrt_brace_g},
                                            {"sqrt_brace_g1", &OperatorSet::sqrt_brace_g1}}};
  for (const auto& [name, field] : internals) {
    out.push_back(make_check(std::string("op:") + name, max_abs_diff(naive.*field, closed.*field),
                             kAgreementThreshold));
  }

  const auto naive_evals = evaluate_catalog(naive, naive_product);
  const auto closed_evals = evaluate_catalog(closed);
  for (std::size_t i = 0; i < naive_evals.size(); ++i) {
    const auto& lhs_route = naive_evals[i];
    const auto& rhs_route = closed_evals[i];
    double dev = 0.0;
    for (std::size_t t = 0; t < lhs_route.terms.size(); ++t) {
      dev = std::max(dev, max_abs_diff(lhs_route.terms[t].lhs, rhs_route.terms[t].lhs));
      dev = std::max(dev, max_abs_diff(lhs_route.terms[t].rhs, rhs_route.terms[t].rhs));
    }
    if (lhs_route.witness && rhs_route.witness) {
      dev = std::max(dev, std::abs(*lhs_route.witness - *rhs_route.witness));
    }
    out.push_back(make_check("check:" + lhs_route.name, dev, kAgreementThreshold));
  }
  return out;
}

}  // namespace qpolar::oracle
