#pragma once

// Scalar layer: roots of unity, q-numbers and the square-root branch used by
// every radical in the operator builders.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qpolar {

using CScalar = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/// Raised for any configuration that does not describe a finite
/// representation at a primitive root of unity.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fock cutoff `s` (dimension s+1), root index `k` with q = exp(2 pi i k/(s+1)),
/// and the base tolerance of the identity checks.
struct AlgebraConfig {
  int s = 2;
  int k = 1;
  double tol = kDefaultTolerance;

  [[nodiscard]] int dim() const noexcept { return s + 1; }
  /// Per-check threshold; grows with the dimension to absorb accumulation
  /// over O(s) products.
  [[nodiscard]] double threshold() const noexcept { return tol * dim(); }

  friend bool operator==(const AlgebraConfig&, const AlgebraConfig&) = default;
};

inline void validate(const AlgebraConfig& cfg) {
  if (cfg.s < 2) {
    throw ConfigError("s must be >= 2 (s = 1 gives q = -1 and a singular q-number), got " +
                      std::to_string(cfg.s));
  }
  if (std::gcd(cfg.k, cfg.s + 1) != 1) {
    throw ConfigError("root index k = " + std::to_string(cfg.k) + " is not coprime to s+1 = " +
                      std::to_string(cfg.s + 1));
  }
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
    throw ConfigError("tolerance must be a positive finite number");
  }
}

[[nodiscard]] inline AlgebraConfig make_config(int s, int k = 1, double tol = kDefaultTolerance) {
  AlgebraConfig cfg{s, k, tol};
  validate(cfg);
  return cfg;
}

namespace detail {

// Residue of v modulo m, centred in (-m/2, m/2].
[[nodiscard]] inline std::int64_t centred_residue(std::int64_t v, std::int64_t m) noexcept {
  std::int64_t r = v % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// exp(2 pi i r / m), split exactly into n quarter turns plus a residual
// angle of at most pi/4 so the trigonometric calls stay well conditioned.
[[nodiscard]] inline CScalar unit_phase(std::int64_t r, std::int64_t m) noexcept {
  const std::int64_t quarter_units = 4 * r;
  std::int64_t n = quarter_units / m;
  std::int64_t rem = quarter_units - n * m;
  if (2 * rem > m) {
    ++n;
    rem -= m;
  } else if (2 * rem < -m) {
    --n;
    rem += m;
  }
  // Extended precision so each component is rounded once; q^(s+1) then
  // stays within ~(s+1) ulp of 1.
  const long double phi = (std::numbers::pi_v<long double> / 2.0L) * static_cast<long double>(rem) /
                          static_cast<long double>(m);
  const double c = rem == 0 ? 1.0 : static_cast<double>(std::cos(phi));
  const double s = rem == 0 ? 0.0 : static_cast<double>(std::sin(phi));
  switch (((n % 4) + 4) % 4) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

}  // namespace detail

/// q^n with the exponent reduced modulo s+1 first, so q^(s+1) = 1 exactly.
[[nodiscard]] inline CScalar root_power(std::int64_t n, const AlgebraConfig& cfg) {
  const std::int64_t m = cfg.dim();
  return detail::unit_phase(detail::centred_residue(n * cfg.k, m), m);
}

[[nodiscard]] inline CScalar primitive_root(const AlgebraConfig& cfg) {
  validate(cfg);
  return root_power(1, cfg);
}

/// [x] = (q^x - q^-x)/(q - q^-1), evaluated as the real ratio
/// sin(2 pi k x/(s+1)) / sin(2 pi k/(s+1)).
///
/// Vanishes exactly whenever q^(2x) = 1. For odd s that includes
/// x = (s+1)/2, not only multiples of s+1.
[[nodiscard]] inline double q_number(std::int64_t x, const AlgebraConfig& cfg) {
  validate(cfg);
  const std::int64_t m = cfg.dim();
  const std::int64_t r = detail::centred_residue(x * cfg.k, m);
  if (r == 0 || 2 * r == m) return 0.0;
  const std::int64_t r1 = detail::centred_residue(cfg.k, m);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  return std::sin(step * static_cast<double>(r)) / std::sin(step * static_cast<double>(r1));
}

/// Principal branch: sqrt([x]) for [x] >= 0, i*sqrt(|[x]|) otherwise.
[[nodiscard]] inline CScalar principal_sqrt(double value) noexcept {
  if (value >= 0.0) return {std::sqrt(value), 0.0};
  return {0.0, std::sqrt(-value)};
}

[[nodiscard]] inline CScalar sqrt_q_number(std::int64_t x, const AlgebraConfig& cfg) {
  return principal_sqrt(q_number(x, cfg));
}

/// Smallest p >= 1 with [p] = 0, i.e. the order of q^2. Equals s+1 for even s
/// and (s+1)/2 for odd s.
[[nodiscard]] inline int nilpotency_index(const AlgebraConfig& cfg) {
  validate(cfg);
  return cfg.dim() % 2 == 0 ? cfg.dim() / 2 : cfg.dim();
}

}  // namespace qpolar
