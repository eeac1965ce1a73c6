#pragma once

// Operator builders for the q-deformed oscillator at q = exp(2 pi i k/(s+1)).
//
// Every radical uses the principal branch from qnumerics. Because some [n]
// are negative, a_dag is the transpose of a with the same radicals and not
// its conjugate transpose. Functions of H are taken by Fourier conjugation of
// diagonal functions of g, using H = F g^-1 F^dag exactly.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpolar/cmatrix.hpp"
#include "qpolar/qnumerics.hpp"

namespace qpolar {

namespace detail {

template <class Fn>
[[nodiscard]] CMatrix diagonal_of(const AlgebraConfig& cfg, Fn&& entry) {
  std::vector<CScalar> values(static_cast<std::size_t>(cfg.dim()));
  for (int n = 0; n < cfg.dim(); ++n) values[static_cast<std::size_t>(n)] = entry(n);
  return diagonal(values);
}

[[nodiscard]] inline std::size_t udim(const AlgebraConfig& cfg) {
  return static_cast<std::size_t>(cfg.dim());
}

}  // namespace detail

/// sqrt([n]) at (n-1, n) for 1 <= n <= s.
[[nodiscard]] inline CMatrix build_annihilation(const AlgebraConfig& cfg) {
  validate(cfg);
  CMatrix a(detail::udim(cfg));
  for (int n = 1; n <= cfg.s; ++n) {
    a(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n)) = sqrt_q_number(n, cfg);
  }
  return a;
}

/// sqrt([n+1]) at (n+1, n) for 0 <= n <= s-1; the n = s term has [s+1] = 0.
[[nodiscard]] inline CMatrix build_creation(const AlgebraConfig& cfg) {
  validate(cfg);
  CMatrix a_dag(detail::udim(cfg));
  for (int n = 0; n < cfg.s; ++n) {
    a_dag(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n)) =
        sqrt_q_number(n + 1, cfg);
  }
  return a_dag;
}

[[nodiscard]] inline CMatrix build_number(const AlgebraConfig& cfg) {
  validate(cfg);
  return detail::diagonal_of(cfg, [](int n) { return CScalar(n, 0.0); });
}

/// g = q^N.
[[nodiscard]] inline CMatrix build_g(const AlgebraConfig& cfg) {
  validate(cfg);
  return detail::diagonal_of(cfg, [&](int n) { return root_power(n, cfg); });
}

/// g^-1 = q^-N.
[[nodiscard]] inline CMatrix build_g_inverse(const AlgebraConfig& cfg) {
  validate(cfg);
  return detail::diagonal_of(cfg, [&](int n) { return root_power(-n, cfg); });
}

/// Lower shift |n+1><n|.
[[nodiscard]] inline CMatrix build_h(const AlgebraConfig& cfg) {
  validate(cfg);
  CMatrix h(detail::udim(cfg));
  for (std::size_t n = 0; n + 1 < detail::udim(cfg); ++n) h(n + 1, n) = 1.0;
  return h;
}

/// Upper shift |n><n+1|.
[[nodiscard]] inline CMatrix build_h_dag(const AlgebraConfig& cfg) { return transpose(build_h(cfg)); }

struct BracePair {
  CMatrix brace;           // {x}
  CMatrix brace_plus_one;  // {x+1}
};

/// ({g}, {g+1}) = (diag([n]), diag([n+1])).
[[nodiscard]] inline BracePair build_braces(const AlgebraConfig& cfg) {
  validate(cfg);
  return {detail::diagonal_of(cfg, [&](int n) { return CScalar(q_number(n, cfg), 0.0); }),
          detail::diagonal_of(cfg, [&](int n) { return CScalar(q_number(n + 1, cfg), 0.0); })};
}

/// Diagonal square roots (sqrt{g}, sqrt{g+1}) with the principal branch.
[[nodiscard]] inline BracePair build_sqrt_braces(const AlgebraConfig& cfg) {
  validate(cfg);
  return {detail::diagonal_of(cfg, [&](int n) { return sqrt_q_number(n, cfg); }),
          detail::diagonal_of(cfg, [&](int n) { return sqrt_q_number(n + 1, cfg); })};
}

/// F_mn = q^(mn) / sqrt(s+1).
[[nodiscard]] inline CMatrix build_fourier(const AlgebraConfig& cfg) {
  validate(cfg);
  const std::size_t d = detail::udim(cfg);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  CMatrix f(d);
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t n = 0; n < d; ++n) {
      f(m, n) = norm * root_power(static_cast<std::int64_t>(m * n), cfg);
    }
  }
  return f;
}

/// H = h + |0><s|, the cyclic shift.
[[nodiscard]] inline CMatrix build_big_h(const AlgebraConfig& cfg) {
  auto big_h = build_h(cfg);
  big_h(0, static_cast<std::size_t>(cfg.s)) = 1.0;
  return big_h;
}

[[nodiscard]] inline CMatrix build_big_h_dag(const AlgebraConfig& cfg) {
  return adjoint(build_big_h(cfg));
}

/// |phi_m> = F|m>, column m of F.
[[nodiscard]] inline CVector phase_state(int m, const AlgebraConfig& cfg) {
  validate(cfg);
  if (m < 0 || m > cfg.s) {
    throw std::out_of_range("phase state index " + std::to_string(m) + " outside 0.." +
                            std::to_string(cfg.s));
  }
  return column(build_fourier(cfg), static_cast<std::size_t>(m));
}

[[nodiscard]] inline CMatrix fourier_conjugate(const CMatrix& a, const CMatrix& fourier) {
  return mul(mul(fourier, a), adjoint(fourier));
}

/// F A F^dag.
[[nodiscard]] inline CMatrix fourier_conjugate(const CMatrix& a, const AlgebraConfig& cfg) {
  const auto f = build_fourier(cfg);
  CMatrix::require_same_dim(a, f);
  return fourier_conjugate(a, f);
}

/// ({H^dag}, {H^dag+1}) in closed form, plus the deviation of the defining
/// quotients (H^dag - H)/(q - q^-1) and (q H^dag - q^-1 H)/(q - q^-1) from it.
struct BigHBraces {
  CMatrix brace;
  CMatrix brace_plus_one;
  double quotient_deviation = 0.0;
};

[[nodiscard]] inline BigHBraces brace_of_big_h(const AlgebraConfig& cfg) {
  const auto f = build_fourier(cfg);
  const auto [brace_g, brace_g1] = build_braces(cfg);
  BigHBraces out{fourier_conjugate(brace_g, f), fourier_conjugate(brace_g1, f), 0.0};

  const CScalar q = root_power(1, cfg);
  const CScalar q_inv = root_power(-1, cfg);
  const CScalar denom_inv = 1.0 / (q - q_inv);
  const auto big_h = build_big_h(cfg);
  const auto big_h_dag = adjoint(big_h);
  const auto quotient = denom_inv * (big_h_dag - big_h);
  const auto quotient_plus_one = denom_inv * (q * big_h_dag - q_inv * big_h);
  out.quotient_deviation = std::max(max_abs_diff(quotient, out.brace),
                                    max_abs_diff(quotient_plus_one, out.brace_plus_one));
  return out;
}

/// (sqrt{H^dag}, sqrt{H^dag+1}): principal branch applied to the spectrum
/// {[n]} on the Fourier-diagonal side.
[[nodiscard]] inline BracePair sqrt_brace_big_h(const AlgebraConfig& cfg) {
  const auto f = build_fourier(cfg);
  const auto roots = build_sqrt_braces(cfg);
  return {fourier_conjugate(roots.brace, f), fourier_conjugate(roots.brace_plus_one, f)};
}

struct OperatorSet {
  AlgebraConfig config;
  CMatrix a, a_dag, n_op;
  CMatrix g, g_inv;
  CMatrix h, h_dag;
  CMatrix brace_g, brace_g1;
  CMatrix sqrt_brace_g, sqrt_brace_g1;
  CMatrix fourier;
  CMatrix big_h, big_h_dag;
  CMatrix a_tilde, a_tilde_dag, n_tilde;
  CMatrix brace_hdag, brace_hdag1;
  CMatrix sqrt_brace_hdag, sqrt_brace_hdag1;
};

[[nodiscard]] inline OperatorSet build_operator_set(const AlgebraConfig& cfg) {
  validate(cfg);
  auto fourier = build_fourier(cfg);
  auto a = build_annihilation(cfg);
  auto a_dag = build_creation(cfg);
  auto n_op = build_number(cfg);
  auto [brace_g, brace_g1] = build_braces(cfg);
  auto [sqrt_g, sqrt_g1] = build_sqrt_braces(cfg);
  auto a_tilde = fourier_conjugate(a, fourier);
  auto a_tilde_dag = fourier_conjugate(a_dag, fourier);
  auto n_tilde = fourier_conjugate(n_op, fourier);
  auto big_h_braces = brace_of_big_h(cfg);
  auto roots = sqrt_brace_big_h(cfg);
  auto big_h = build_big_h(cfg);
  auto big_h_dag = adjoint(big_h);
  return OperatorSet{cfg,
                     std::move(a),
                     std::move(a_dag),
                     std::move(n_op),
                     build_g(cfg),
                     build_g_inverse(cfg),
                     build_h(cfg),
                     build_h_dag(cfg),
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
                     std::move(big_h_braces.brace),
                     std::move(big_h_braces.brace_plus_one),
                     std::move(roots.brace),
                     std::move(roots.brace_plus_one)};
}

/// Operator names accepted by the CLI and the JSON export, in catalog order.
inline constexpr std::array<std::string_view, 15> kOperatorNames{
    "a",    "adag",      "n",          "g",         "h",
    "hdag", "f",         "bigh",       "atilde",    "atildedag",
    "ntilde", "braceHdag", "braceHdag1", "sqrtBraceHdag", "sqrtBraceHdag1"};

[[nodiscard]] inline const CMatrix* find_operator(const OperatorSet& ops, std::string_view name) {
  if (name == "a") return &ops.a;
  if (name == "adag") return &ops.a_dag;
  if (name == "n") return &ops.n_op;
  if (name == "g") return &ops.g;
  if (name == "h") return &ops.h;
  if (name == "hdag") return &ops.h_dag;
  if (name == "f") return &ops.fourier;
  if (name == "bigh") return &ops.big_h;
  if (name == "atilde") return &ops.a_tilde;
  if (name == "atildedag") return &ops.a_tilde_dag;
  if (name == "ntilde") return &ops.n_tilde;
  if (name == "braceHdag") return &ops.brace_hdag;
  if (name == "braceHdag1") return &ops.brace_hdag1;
  if (name == "sqrtBraceHdag") return &ops.sqrt_brace_hdag;
  if (name == "sqrtBraceHdag1") return &ops.sqrt_brace_hdag1;
  return nullptr;
}

inline constexpr std::array<std::string_view, 4> kSpectrumOperators{"g", "bigh", "braceHdag",
                                                                    "braceHdag1"};

/// Closed-form eigenvalues indexed by n = 0..s: g -> q^n, H -> q^-n,
/// {H^dag} -> [n], {H^dag+1} -> [n+1]. Empty for operators outside that list.
[[nodiscard]] inline std::optional<std::vector<CScalar>> closed_form_spectrum(
    std::string_view name, const AlgebraConfig& cfg) {
  validate(cfg);
  std::vector<CScalar> values;
  values.reserve(static_cast<std::size_t>(cfg.dim()));
  for (int n = 0; n < cfg.dim(); ++n) {
    if (name == "g") {
      values.push_back(root_power(n, cfg));
    } else if (name == "bigh") {
      values.push_back(root_power(-n, cfg));
    } else if (name == "braceHdag") {
      values.emplace_back(q_number(n, cfg), 0.0);
    } else if (name == "braceHdag1") {
      values.emplace_back(q_number(n + 1, cfg), 0.0);
    } else {
      return std::nullopt;
    }
  }
  return values;
}

struct PolarDecomposition {
  CMatrix unitary;  // g^-1
  CMatrix radial;   // sqrt{H^dag}
  double reconstruction_error = 0.0;        // |a~ - g^-1 sqrt{H^dag}|
  double alternate_annihilation_error = 0.0;  // |a~ - sqrt{H^dag+1} g^-1|
  double creation_error = 0.0;              // |a~dag - sqrt{H^dag} g|
  double alternate_creation_error = 0.0;    // |a~dag - g sqrt{H^dag+1}|
  bool radial_is_conjugate_symmetric = false;
};

/// a~ = g^-1 sqrt{H^dag} with a~ = F a F^dag built independently. The radial
/// factor is conjugate-symmetric only when every [n] >= 0, which never holds
/// at k = 1; the flag reports which case applies.
[[nodiscard]] inline PolarDecomposition polar_decompose(const AlgebraConfig& cfg) {
  const auto f = build_fourier(cfg);
  const auto a_tilde = fourier_conjugate(build_annihilation(cfg), f);
  const auto a_tilde_dag = fourier_conjugate(build_creation(cfg), f);
  const auto g = build_g(cfg);
  auto roots = sqrt_brace_big_h(cfg);

  PolarDecomposition out{build_g_inverse(cfg), roots.brace};
  out.reconstruction_error = max_abs_diff(a_tilde, mul(out.unitary, out.radial));
  out.alternate_annihilation_error = max_abs_diff(a_tilde, mul(roots.brace_plus_one, out.unitary));
  out.creation_error = max_abs_diff(a_tilde_dag, mul(out.radial, g));
  out.alternate_creation_error = max_abs_diff(a_tilde_dag, mul(g, roots.brace_plus_one));
  out.radial_is_conjugate_symmetric = is_conjugate_symmetric(out.radial, cfg.threshold());
  return out;
}

}  // namespace qpolar
