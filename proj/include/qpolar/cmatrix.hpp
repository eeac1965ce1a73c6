#pragma once

// Dense square complex matrices sized to a truncated Fock space.
//
// Storage is row-major. Dimensions stay small (a few hundred at most) so
// products are the plain O(n^3) kind; there is deliberately no eigensolver.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpolar {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <std::floating_point Real>
class BasicVector {
 public:
  using value_type = std::complex<Real>;

  explicit BasicVector(std::size_t dim) : entries_(dim) {
    if (dim == 0) throw DimensionError("vector dimension must be >= 1");
  }
  explicit BasicVector(std::vector<value_type> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionError("vector dimension must be >= 1");
  }

  [[nodiscard]] std::size_t dim() const noexcept { return entries_.size(); }
  [[nodiscard]] value_type& operator[](std::size_t i) noexcept { return entries_[i]; }
  [[nodiscard]] const value_type& operator[](std::size_t i) const noexcept { return entries_[i]; }
  [[nodiscard]] std::span<const value_type> entries() const noexcept { return entries_; }

  friend bool operator==(const BasicVector&, const BasicVector&) = default;

 private:
  std::vector<value_type> entries_;
};

template <std::floating_point Real>
class BasicMatrix {
 public:
  using value_type = std::complex<Real>;

  /// Zero matrix of side `dim`.
  explicit BasicMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw DimensionError("matrix dimension must be >= 1");
  }

  /// Takes ownership of row-major entries; their count must be a perfect square.
  BasicMatrix(std::size_t dim, std::vector<value_type> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) throw DimensionError("matrix dimension must be >= 1");
    if (entries_.size() != dim * dim) {
      throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " +
                           std::to_string(entries_.size()));
    }
  }

  BasicMatrix(std::initializer_list<std::initializer_list<value_type>> rows)
      : BasicMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw DimensionError("ragged row in matrix literal");
      std::copy(row.begin(), row.end(), entries_.begin() + static_cast<std::ptrdiff_t>(r * dim_));
      ++r;
    }
  }

  [[nodiscard]] static BasicMatrix zeros(std::size_t dim) { return BasicMatrix(dim); }

  [[nodiscard]] static BasicMatrix identity(std::size_t dim) {
    BasicMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Real{1};
    return m;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  [[nodiscard]] value_type& operator()(std::size_t r, std::size_t c) noexcept {
    return entries_[r * dim_ + c];
  }
  [[nodiscard]] const value_type& operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * dim_ + c];
  }

  [[nodiscard]] const value_type& at(std::size_t r, std::size_t c) const {
    if (r >= dim_ || c >= dim_) throw std::out_of_range("matrix index out of range");
    return (*this)(r, c);
  }

  [[nodiscard]] std::span<const value_type> entries() const noexcept { return entries_; }

  [[nodiscard]] bool all_finite() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const value_type& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  BasicMatrix& operator+=(const BasicMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
  }
  BasicMatrix& operator*=(value_type alpha) noexcept {
    for (auto& z : entries_) z *= alpha;
    return *this;
  }

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

  static void require_same_dim(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.dim_ != b.dim_) {
      throw DimensionError("dimension mismatch: " + std::to_string(a.dim_) + " vs " +
                           std::to_string(b.dim_));
    }
  }

 private:
  std::size_t dim_;
  std::vector<value_type> entries_;
};

using CScalar = std::complex<double>;
using CMatrix = BasicMatrix<double>;
using CVector = BasicVector<double>;

/// |m><n|: a single 1 at row m, column n.
template <std::floating_point Real = double>
[[nodiscard]] BasicMatrix<Real> dyad(std::size_t m, std::size_t n, std::size_t dim) {
  if (m >= dim || n >= dim) {
    throw std::out_of_range("dyad index (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") outside dimension " + std::to_string(dim));
  }
  BasicMatrix<Real> out(dim);
  out(m, n) = Real{1};
  return out;
}

template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> diagonal(std::span<const std::complex<Real>> values) {
  BasicMatrix<Real> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
  return out;
}

template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> diagonal(const std::vector<std::complex<Real>>& values) {
  return diagonal(std::span<const std::complex<Real>>(values));
}

template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> operator+(BasicMatrix<Real> a, const BasicMatrix<Real>& b) {
  a += b;
  return a;
}

template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> operator-(BasicMatrix<Real> a, const BasicMatrix<Real>& b) {
  a -= b;
  return a;
}

template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> operator-(BasicMatrix<Real> a) {
  a *= std::complex<Real>(-1);
  return a;
}

template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> scale(std::complex<Real> alpha, BasicMatrix<Real> a) {
  a *= alpha;
  return a;
}

template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> operator*(std::complex<Real> alpha, BasicMatrix<Real> a) {
  a *= alpha;
  return a;
}

template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> mul(const BasicMatrix<Real>& a, const BasicMatrix<Real>& b) {
  BasicMatrix<Real>::require_same_dim(a, b);
  const std::size_t n = a.dim();
  BasicMatrix<Real> out(n);
  // i-k-j order; most operators here are sparse shifts, so skip zero rows of b.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a(i, k);
      if (aik == std::complex<Real>{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> operator*(const BasicMatrix<Real>& a, const BasicMatrix<Real>& b) {
  return mul(a, b);
}

template <std::floating_point Real>
[[nodiscard]] BasicVector<Real> operator*(const BasicMatrix<Real>& a, const BasicVector<Real>& v) {
  if (a.dim() != v.dim()) throw DimensionError("matrix-vector dimension mismatch");
  BasicVector<Real> out(v.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

/// Commutator [a, b] = ab - ba.
template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> commutator(const BasicMatrix<Real>& a, const BasicMatrix<Real>& b) {
  return mul(a, b) - mul(b, a);
}

template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> adjoint(const BasicMatrix<Real>& a) {
  BasicMatrix<Real> out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = std::conj(a(r, c));
  }
  return out;
}

template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> transpose(const BasicMatrix<Real>& a) {
  BasicMatrix<Real> out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

/// Repeated squaring; p = 0 gives the identity.
template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> mat_pow(const BasicMatrix<Real>& a, unsigned p) {
  auto result = BasicMatrix<Real>::identity(a.dim());
  auto base = a;
  while (p > 0) {
    if (p & 1U) result = mul(result, base);
    p >>= 1U;
    if (p > 0) base = mul(base, base);
  }
  return result;
}

/// Largest entry modulus.
template <std::floating_point Real>
[[nodiscard]] Real max_abs(const BasicMatrix<Real>& a) {
  Real best{0};
  for (const auto& z : a.entries()) best = std::max(best, std::abs(z));
  return best;
}

/// Entrywise max |A_ij - B_ij|. This is the deviation metric of every
/// identity check.
template <std::floating_point Real>
[[nodiscard]] Real max_abs_diff(const BasicMatrix<Real>& a, const BasicMatrix<Real>& b) {
  BasicMatrix<Real>::require_same_dim(a, b);
  Real best{0};
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) best = std::max(best, std::abs(ea[i] - eb[i]));
  return best;
}

template <std::floating_point Real>
[[nodiscard]] bool is_unitary(const BasicMatrix<Real>& a, Real tol) {
  const auto id = BasicMatrix<Real>::identity(a.dim());
  const auto a_dag = adjoint(a);
  return max_abs_diff(mul(a, a_dag), id) <= tol && max_abs_diff(mul(a_dag, a), id) <= tol;
}

template <std::floating_point Real>
[[nodiscard]] bool is_conjugate_symmetric(const BasicMatrix<Real>& a, Real tol) {
  return max_abs_diff(a, adjoint(a)) <= tol;
}

/// <u|v>, antilinear in the first slot.
template <std::floating_point Real>
[[nodiscard]] std::complex<Real> inner(const BasicVector<Real>& u, const BasicVector<Real>& v) {
  if (u.dim() != v.dim()) throw DimensionError("inner product dimension mismatch");
  std::complex<Real> acc{};
  for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

/// |u><v|.
template <std::floating_point Real>
[[nodiscard]] BasicMatrix<Real> outer(const BasicVector<Real>& u, const BasicVector<Real>& v) {
  if (u.dim() != v.dim()) throw DimensionError("outer product dimension mismatch");
  BasicMatrix<Real> out(u.dim());
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < v.dim(); ++c) out(r, c) = u[r] * std::conj(v[c]);
  }
  return out;
}

template <std::floating_point Real>
[[nodiscard]] BasicVector<Real> column(const BasicMatrix<Real>& a, std::size_t c) {
  if (c >= a.dim()) throw std::out_of_range("column index out of range");
  BasicVector<Real> out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) out[r] = a(r, c);
  return out;
}

}  // namespace qpolar
