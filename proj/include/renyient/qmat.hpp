// Copyright 2026 The renyient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small dense complex linear algebra (dimensions up to 16): matrices,
// Hermitian eigendecomposition by cyclic Jacobi rotations, Kronecker
// products, partial traces, spectral matrix functions and validated
// density matrices.
//
// Tensor-factor convention: factor 0 is the leftmost factor and the most
// significant digit of a basis index, so |q1 q2 q3> has index 4*q1 + 2*q2 + q3.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "renyient/error.hpp"

namespace renyient {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds a matrix from nested row lists; all rows must have equal length.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  static ComplexMatrix diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
  }

  /// |v><v|
  static ComplexMatrix outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    ComplexMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector product: dimensions differ");
    ComplexVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void require_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff: shapes differ");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

/// max |M_ij - conj(M_ji)|
inline double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix h = m + m.adjoint();
  h *= 0.5;
  return h;
}

inline Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("inner: lengths differ");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm(std::span<const Complex> v) { return std::sqrt(std::real(inner(v, v))); }

/// Re Tr(A B) for square matrices of equal size.
inline double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) s += std::real(a(i, k) * b(k, i));
  return s;
}

// ---------------------------------------------------------------------------
// Kronecker products and partial traces

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

inline ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) r[i * b.size() + k] = a[i] * b[k];
  return r;
}

/// Traces out every factor not listed in `keep`. Kept factors retain their
/// original relative order regardless of the order given in `keep`.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                   std::span<const std::size_t> keep) {
  if (!m.is_square()) throw DimensionError("partial_trace: matrix is not square");
  const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (dims.empty() || total != m.rows())
    throw DimensionError("partial_trace: product of factor dimensions " + std::to_string(total) +
                         " does not match matrix dimension " + std::to_string(m.rows()));
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size() || kept[k]) throw DimensionError("partial_trace: invalid keep index");
    kept[k] = true;
  }

  // Split each full index into (kept-part, traced-part) composite indices.
  std::vector<std::size_t> kept_index(total), traced_index(total);
  std::size_t kept_dim = 1;
  for (std::size_t f = 0; f < dims.size(); ++f)
    if (kept[f]) kept_dim *= dims[f];
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx, stride = total, ki = 0, ti = 0;
    for (std::size_t f = 0; f < dims.size(); ++f) {
      stride /= dims[f];
      const std::size_t digit = rem / stride;
      rem %= stride;
      if (kept[f]) ki = ki * dims[f] + digit;
      else ti = ti * dims[f] + digit;
    }
    kept_index[idx] = ki;
    traced_index[idx] = ti;
  }

  ComplexMatrix r(kept_dim, kept_dim);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      if (traced_index[i] == traced_index[j]) r(kept_index[i], kept_index[j]) += m(i, j);
  return r;
}

inline ComplexMatrix partial_trace(const ComplexMatrix& m, std::initializer_list<std::size_t> dims,
                                   std::initializer_list<std::size_t> keep) {
  return partial_trace(m, std::span<const std::size_t>(dims.begin(), dims.size()),
                       std::span<const std::size_t>(keep.begin(), keep.size()));
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k belongs to eigenvalues[k]

  ComplexVector eigenvector(std::size_t k) const {
    ComplexVector v(eigenvectors.rows());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, k);
    return v;
  }

  /// V diag(values) V^dagger
  ComplexMatrix reconstruct(std::span<const double> values) const {
    const std::size_t n = eigenvectors.rows();
    ComplexMatrix r(n, n);
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (values[k] == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const Complex vik = eigenvectors(i, k) * values[k];
        for (std::size_t j = 0; j < n; ++j) r(i, j) += vik * std::conj(eigenvectors(j, k));
      }
    }
    return r;
  }

  ComplexMatrix reconstruct() const { return reconstruct(eigenvalues); }
};

inline constexpr double kHermitianInputTolerance = 1e-10;

namespace detail {

/// Cyclic complex Jacobi sweeps on a Hermitian matrix (no input checks).
inline SpectralDecomposition jacobi_eigen(ComplexMatrix a) {
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(2.0 * off) <= 1e-14 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double theta = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex phase_conj = std::conj(apq / mag);
        // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] restricted to (p, q).
        const Complex upp = c, upq = s, uqp = -s * phase_conj, uqq = c * phase_conj;

        for (std::size_t k = 0; k < n; ++k) {  // A <- A U, V <- V U
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- U^dagger A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = std::real(a(p, p));
        a(q, q) = std::real(a(q, q));
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return std::real(a(x, x)) < std::real(a(y, y)); });
  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = std::real(a(order[k], order[k]));
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix; eigenvalues ascending.
/// Throws NotHermitianError when max |H_ij - conj(H_ji)| exceeds 1e-10.
inline SpectralDecomposition eig_hermitian(const ComplexMatrix& h) {
  if (!h.is_square()) throw DimensionError("eig_hermitian: matrix is not square");
  const double defect = hermiticity_defect(h);
  if (defect > kHermitianInputTolerance)
    throw NotHermitianError("eig_hermitian: input is not Hermitian (defect " + std::to_string(defect) + ")");
  return detail::jacobi_eigen(hermitian_part(h));
}

// ---------------------------------------------------------------------------
// Density matrices

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPositivityTolerance = 1e-10;

/// Square, Hermitian, unit-trace, positive semidefinite matrix. Every
/// instance has passed validation; the stored matrix is exactly Hermitian.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m) : m_(validated(m)) {}

  /// |psi><psi| for a unit-norm vector.
  static DensityMatrix pure(std::span<const Complex> psi) {
    const double n = norm(psi);
    if (std::abs(n - 1.0) > 1e-10) throw InvalidStateError("pure: state vector is not normalized");
    return DensityMatrix(ComplexMatrix::outer(psi));
  }

  static DensityMatrix maximally_mixed(std::size_t dim) {
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return DensityMatrix(m);
  }

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

  double purity() const { return real_trace_product(m_, m_); }

 private:
  static ComplexMatrix validated(const ComplexMatrix& m) {
    if (!m.is_square() || m.rows() == 0) throw DimensionError("DensityMatrix: matrix must be square and non-empty");
    const double defect = hermiticity_defect(m);
    if (defect > kHermiticityTolerance)
      throw InvalidStateError("DensityMatrix: not Hermitian (defect " + std::to_string(defect) + ")");
    const double tr_err = std::abs(m.trace() - 1.0);
    if (tr_err > kTraceTolerance)
      throw InvalidStateError("DensityMatrix: trace differs from 1 by " + std::to_string(tr_err));
    ComplexMatrix h = hermitian_part(m);
    const double min_eig = detail::jacobi_eigen(h).eigenvalues.front();
    if (min_eig < -kPositivityTolerance)
      throw InvalidStateError("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
    return h;
  }

  ComplexMatrix m_;
};

inline SpectralDecomposition eig_hermitian(const DensityMatrix& rho) { return detail::jacobi_eigen(rho.matrix()); }

inline DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                                   std::span<const std::size_t> keep) {
  return DensityMatrix(partial_trace(rho.matrix(), dims, keep));
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> dims,
                                   std::initializer_list<std::size_t> keep) {
  return DensityMatrix(partial_trace(rho.matrix(), dims, keep));
}

/// Two-sided cut of a state into side A (leading tensor factors) and side B.
struct Bipartition {
  std::size_t dim_a = 2;
  std::size_t dim_b = 2;

  std::size_t dim() const noexcept { return dim_a * dim_b; }
  void require_matches(std::size_t state_dim) const {
    if (dim_a == 0 || dim_b == 0 || dim() != state_dim)
      throw DimensionError("Bipartition " + std::to_string(dim_a) + "x" + std::to_string(dim_b) +
                           " does not match state dimension " + std::to_string(state_dim));
  }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// ---------------------------------------------------------------------------
// Spectral functions

/// V diag(f(max(lambda_i, floor))) V^dagger for a precomputed decomposition.
template <class F>
ComplexMatrix mat_func(const SpectralDecomposition& spec, F&& f, double floor) {
  std::vector<double> values(spec.eigenvalues.size());
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = f(std::max(spec.eigenvalues[k], floor));
  return spec.reconstruct(values);
}

template <class F>
ComplexMatrix mat_func(const DensityMatrix& rho, F&& f, double floor) {
  if (!(floor >= 0.0)) throw RangeError("mat_func: floor must be non-negative");
  return mat_func(eig_hermitian(rho), std::forward<F>(f), floor);
}

/// Number of eigenvalues strictly greater than `tol`.
inline std::size_t numerical_rank(const DensityMatrix& rho, double tol) {
  if (!(tol > 0.0)) throw RangeError("numerical_rank: tolerance must be positive");
  const auto spec = eig_hermitian(rho);
  return static_cast<std::size_t>(
      std::count_if(spec.eigenvalues.begin(), spec.eigenvalues.end(), [tol](double x) { return x > tol; }));
}

/// Largest eigenvalue (the operator norm of a PSD matrix).
inline double operator_norm(const DensityMatrix& rho) { return eig_hermitian(rho).eigenvalues.back(); }

// ---------------------------------------------------------------------------
// Seeded random fixtures

namespace detail {
inline ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (auto& z : g.data()) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = Complex(re, im);
  }
  return g;
}
}  // namespace detail

/// Random state G G^dagger / Tr with G a dim x rank complex Gaussian matrix.
inline DensityMatrix random_density_matrix(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (dim == 0 || rank < 1 || rank > dim)
    throw RangeError("random_density_matrix: rank must satisfy 1 <= rank <= dim");
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = detail::gaussian_matrix(dim, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m *= 1.0 / std::real(m.trace());
  return DensityMatrix(hermitian_part(m));
}

/// Haar-random unitary (Gram-Schmidt on a complex Gaussian matrix).
inline ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ComplexMatrix g = detail::gaussian_matrix(dim, dim, rng);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < dim; ++i) proj += std::conj(g(i, j)) * g(i, k);
      for (std::size_t i = 0; i < dim; ++i) g(i, k) -= proj * g(i, j);
    }
    double n = 0.0;
    for (std::size_t i = 0; i < dim; ++i) n += std::norm(g(i, k));
    n = std::sqrt(n);
    for (std::size_t i = 0; i < dim; ++i) g(i, k) /= n;
  }
  return g;
}

/// Random Hermitian matrix with entries of order one.
inline ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return hermitian_part(detail::gaussian_matrix(dim, dim, rng));
}

/// Random unit vector (Haar measure on the sphere).
inline ComplexVector random_pure_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (auto& z : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = Complex(re, im);
  }
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

/// U rho U^dagger
inline DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u) {
  return DensityMatrix(hermitian_part(u * rho.matrix() * u.adjoint()));
}

// ---------------------------------------------------------------------------
// Pauli matrices (sigma_z = diag(1, -1) on |0>, |1>)

namespace pauli {
inline ComplexMatrix i2() { return ComplexMatrix::identity(2); }
inline ComplexMatrix x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix y() { return ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
inline ComplexMatrix z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

}  // namespace renyient
