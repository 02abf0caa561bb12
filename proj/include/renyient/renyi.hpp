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

// Rényi entropies and Rényi relative entropies (Petz "traditional" and
// sandwiched forms). All logarithms are natural.
//
// Relative entropies use the 1/(alpha - 1) prefactor, so both families are
// non-negative and reduce to the Umegaki relative entropy Tr rho (ln rho - ln sigma)
// at alpha = 1. alpha == 1 is always evaluated through that exact formula.
//
// Eigenvalues of sigma are floored at `floor` only where a negative power or
// a logarithm is taken; positive powers clamp at zero instead.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "renyient/error.hpp"
#include "renyient/qmat.hpp"

namespace renyient {

inline constexpr double kDefaultFloor = 1e-12;

/// rho-weight above which a sub-floor eigenvalue of sigma makes the Umegaki divergence infinite.
inline constexpr double kSupportTolerance = 1e-10;

/// Eigenvalues at or below this are treated as exact zeros in entropy sums.
inline constexpr double kZeroEigenvalue = 1e-13;

/// Largest sandwiched alpha accepted by the optimizer.
inline constexpr double kMaxSandwichedAlpha = 64.0;

enum class Variant { Traditional, Sandwiched };

inline std::string_view to_string(Variant v) { return v == Variant::Traditional ? "trad" : "sand"; }

inline std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "trad" || s == "traditional" || s == "t") return Variant::Traditional;
  if (s == "sand" || s == "sandwiched" || s == "s") return Variant::Sandwiched;
  return std::nullopt;
}

/// Order parameter of a Rényi divergence together with its family.
///   Traditional: 0 < alpha <= 2.  Sandwiched: alpha >= 1/2.
/// alpha == 1 is admissible for both and means the Umegaki relative entropy.
struct RenyiParameter {
  double alpha = 1.0;
  Variant variant = Variant::Traditional;

  static RenyiParameter traditional(double alpha) { return {alpha, Variant::Traditional}; }
  static RenyiParameter sandwiched(double alpha) { return {alpha, Variant::Sandwiched}; }

  bool admissible() const noexcept {
    if (!std::isfinite(alpha)) return false;
    if (variant == Variant::Traditional) return alpha > 0.0 && alpha <= 2.0;
    return alpha >= 0.5;
  }

  void validate() const {
    if (!admissible())
      throw RangeError("alpha = " + std::to_string(alpha) + " is outside the admissible range of the " +
                       (variant == Variant::Traditional ? "traditional (0, 2]" : "sandwiched [1/2, inf)") +
                       " Rényi relative entropy");
  }

  friend bool operator==(const RenyiParameter&, const RenyiParameter&) = default;
};

/// An entropy or divergence in nats; +infinity marks a support mismatch.
struct EntropyValue {
  double nats = 0.0;

  static EntropyValue infinite() { return {std::numeric_limits<double>::infinity()}; }
  bool is_infinite() const noexcept { return std::isinf(nats) && nats > 0.0; }

  friend bool operator==(const EntropyValue&, const EntropyValue&) = default;
};

// ---------------------------------------------------------------------------
// Entropies

/// -Tr rho ln rho
inline EntropyValue von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double x : eig_hermitian(rho).eigenvalues)
    if (x > kZeroEigenvalue) s -= x * std::log(x);
  return {s};
}

/// S_alpha(rho) = ln Tr[rho^alpha] / (1 - alpha); alpha == 1 gives the von Neumann entropy.
inline EntropyValue renyi_entropy(const DensityMatrix& rho, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw RangeError("renyi_entropy: alpha must be positive and finite");
  if (alpha == 1.0) return von_neumann_entropy(rho);
  const auto values = eig_hermitian(rho).eigenvalues;
  const double top = values.back();
  // ln sum x^a = a ln(top) + ln sum (x/top)^a, which survives large alpha.
  double sum = 0.0;
  for (double x : values)
    if (x > kZeroEigenvalue) sum += std::pow(x / top, alpha);
  const double log_trace = alpha * std::log(top) + std::log(sum);
  return {log_trace / (1.0 - alpha)};
}

/// -ln ||rho||
inline EntropyValue min_entropy(const DensityMatrix& rho) { return {-std::log(operator_norm(rho))}; }

/// ln rank(rho), counting eigenvalues above `tol`.
inline EntropyValue max_entropy(const DensityMatrix& rho, double tol = 1e-10) {
  return {std::log(static_cast<double>(numerical_rank(rho, tol)))};
}

/// -ln Tr[rho^2]
inline EntropyValue collision_entropy(const DensityMatrix& rho) { return {-std::log(rho.purity())}; }

// ---------------------------------------------------------------------------
// Relative entropies

namespace detail {

inline void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw DimensionError("relative entropy: dimensions differ (" + std::to_string(rho.dim()) + " vs " +
                         std::to_string(sigma.dim()) + ")");
}

/// x^p on a PSD spectrum: negative powers use the floor, positive powers treat
/// round-off eigenvalues (<= kZeroEigenvalue) as exact zeros, since x^p with
/// small p would otherwise magnify them (1e-17^0.3 is about 1e-5).
inline double floored_power(double x, double p, double floor) {
  if (p == 0.0) return 1.0;
  if (p < 0.0) return std::pow(std::max(x, floor), p);
  return x > kZeroEigenvalue ? std::pow(x, p) : 0.0;
}

/// Sum of mu^alpha over the non-negligible part of a PSD spectrum.
inline double power_trace(const std::vector<double>& mu, double alpha) {
  const double cut = kZeroEigenvalue * std::max(1.0, mu.empty() ? 0.0 : mu.back());
  double q = 0.0;
  for (double m : mu)
    if (m > cut) q += std::pow(m, alpha);
  return q;
}

inline ComplexMatrix spectral_power(const SpectralDecomposition& spec, double p, double floor) {
  std::vector<double> v(spec.eigenvalues.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = floored_power(spec.eigenvalues[k], p, floor);
  return spec.reconstruct(v);
}

inline double umegaki(const SpectralDecomposition& rho_spec, const ComplexMatrix& rho,
                      const SpectralDecomposition& sigma_spec, double floor) {
  double neg_entropy = 0.0;
  for (double x : rho_spec.eigenvalues)
    if (x > kZeroEigenvalue) neg_entropy += x * std::log(x);
  const std::size_t n = rho.rows();
  double cross = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    // w_k = <v_k| rho |v_k>
    Complex w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += rho(i, j) * sigma_spec.eigenvectors(j, k);
      w += std::conj(sigma_spec.eigenvectors(i, k)) * row;
    }
    const double weight = std::real(w);
    const double s = sigma_spec.eigenvalues[k];
    if (s < floor && weight > kSupportTolerance) return std::numeric_limits<double>::infinity();
    cross += weight * std::log(std::max(s, floor));
  }
  return neg_entropy - cross;
}

inline double log_ratio_divergence(double q, double alpha) {
  if (!(q > 0.0)) return std::numeric_limits<double>::infinity();
  if (!std::isfinite(q)) return std::numeric_limits<double>::infinity();
  return std::log(q) / (alpha - 1.0);
}

}  // namespace detail

/// Umegaki relative entropy Tr rho (ln rho - ln sigma). A support mismatch
/// (sigma eigenvalue below `floor` carrying rho-weight above 1e-10) yields +infinity.
inline EntropyValue kl_rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                   double floor = kDefaultFloor) {
  detail::require_same_dim(rho, sigma);
  return {detail::umegaki(eig_hermitian(rho), rho.matrix(), eig_hermitian(sigma), floor)};
}

/// Petz form ln Tr(rho^alpha sigma^(1-alpha)) / (alpha - 1), for 0 < alpha <= 2.
inline EntropyValue trad_rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha,
                                     double floor = kDefaultFloor) {
  detail::require_same_dim(rho, sigma);
  RenyiParameter::traditional(alpha).validate();
  if (alpha == 1.0) return kl_rel_entropy(rho, sigma, floor);
  const ComplexMatrix rho_a = detail::spectral_power(eig_hermitian(rho), alpha, floor);
  const ComplexMatrix sigma_b = detail::spectral_power(eig_hermitian(sigma), 1.0 - alpha, floor);
  return {detail::log_ratio_divergence(real_trace_product(rho_a, sigma_b), alpha)};
}

/// Sandwiched form ln Tr[(sigma^s rho sigma^s)^alpha] / (alpha - 1), s = (1 - alpha) / (2 alpha), alpha >= 1/2.
inline EntropyValue sand_rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha,
                                     double floor = kDefaultFloor) {
  detail::require_same_dim(rho, sigma);
  RenyiParameter::sandwiched(alpha).validate();
  if (alpha == 1.0) return kl_rel_entropy(rho, sigma, floor);
  const double s = (1.0 - alpha) / (2.0 * alpha);
  const ComplexMatrix a = detail::spectral_power(eig_hermitian(sigma), s, floor);
  const ComplexMatrix inner_m = hermitian_part(a * rho.matrix() * a);
  const double q = detail::power_trace(detail::jacobi_eigen(inner_m).eigenvalues, alpha);
  return {detail::log_ratio_divergence(q, alpha)};
}

/// Dispatches on the variant; alpha == 1 is the Umegaki relative entropy for both.
inline EntropyValue rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, RenyiParameter p,
                                double floor = kDefaultFloor) {
  p.validate();
  if (p.alpha == 1.0) return kl_rel_entropy(rho, sigma, floor);
  return p.variant == Variant::Traditional ? trad_rel_entropy(rho, sigma, p.alpha, floor)
                                           : sand_rel_entropy(rho, sigma, p.alpha, floor);
}

// ---------------------------------------------------------------------------
// Divergence with analytic gradient in sigma

/// D(rho || sigma) for a fixed rho, evaluated on raw Hermitian sigma together
/// with the Hermitian gradient G satisfying dD = Re Tr(G dsigma).
///
/// Gradients come from the Daleckii-Krein formula for the Fréchet derivative
/// of spectral functions: d f(sigma)[X] = U (Gamma o U^dagger X U) U^dagger
/// with Gamma the first divided differences of f on the eigenvalues of sigma.
class DivergenceFunctional {
 public:
  DivergenceFunctional(const DensityMatrix& rho, RenyiParameter p, double floor = kDefaultFloor)
      : rho_(rho.matrix()), p_(p), floor_(floor), n_(rho.dim()) {
    p.validate();
    const auto rho_spec = eig_hermitian(rho);
    if (is_umegaki()) {
      for (double x : rho_spec.eigenvalues)
        if (x > kZeroEigenvalue) neg_entropy_ += x * std::log(x);
    } else if (p_.variant == Variant::Traditional) {
      rho_power_ = detail::spectral_power(rho_spec, p_.alpha, floor_);
    }
  }

  std::size_t dim() const noexcept { return n_; }
  RenyiParameter parameter() const noexcept { return p_; }
  double floor() const noexcept { return floor_; }

  /// Returns +infinity (and leaves `grad` unspecified) on support mismatch.
  double evaluate(const ComplexMatrix& sigma, ComplexMatrix* grad) const {
    const SpectralDecomposition spec = detail::jacobi_eigen(sigma);
    if (is_umegaki()) return umegaki(spec, grad);
    if (p_.variant == Variant::Traditional) return petz(spec, grad);
    return sandwiched(spec, sigma, grad);
  }

 private:
  bool is_umegaki() const noexcept { return p_.alpha == 1.0; }

  double eff(double x) const noexcept { return std::max(x, std::max(floor_, 1e-300)); }

  // U^dagger C U
  static ComplexMatrix to_eigenbasis(const SpectralDecomposition& spec, const ComplexMatrix& c) {
    return spec.eigenvectors.adjoint() * c * spec.eigenvectors;
  }
  static ComplexMatrix from_eigenbasis(const SpectralDecomposition& spec, const ComplexMatrix& c) {
    return spec.eigenvectors * c * spec.eigenvectors.adjoint();
  }

  /// Gamma o C in place, Gamma_ij = (f(x_i) - f(x_j)) / (x_i - x_j) or f'(x) on the diagonal.
  template <class F, class DF>
  void apply_divided_differences(const std::vector<double>& x, ComplexMatrix& c, F f, DF df) const {
    std::vector<double> fx(n_), xe(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      xe[i] = eff(x[i]);
      fx[i] = f(xe[i]);
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const double dx = xe[i] - xe[j];
        const double gamma = std::abs(dx) > 1e-9 * std::max(xe[i], xe[j]) ? (fx[i] - fx[j]) / dx
                                                                          : df(0.5 * (xe[i] + xe[j]));
        c(i, j) *= gamma;
      }
  }

  double umegaki(const SpectralDecomposition& spec, ComplexMatrix* grad) const {
    ComplexMatrix c = to_eigenbasis(spec, rho_);
    double cross = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      const double w = std::real(c(k, k));
      const double s = spec.eigenvalues[k];
      if (s < floor_ && w > kSupportTolerance) return std::numeric_limits<double>::infinity();
      cross += w * std::log(eff(s));
    }
    if (grad) {
      apply_divided_differences(
          spec.eigenvalues, c, [](double x) { return std::log(x); }, [](double x) { return 1.0 / x; });
      *grad = from_eigenbasis(spec, c);
      *grad *= -1.0;
    }
    return neg_entropy_ - cross;
  }

  double petz(const SpectralDecomposition& spec, ComplexMatrix* grad) const {
    const double a = p_.alpha;
    const double e = 1.0 - a;
    ComplexMatrix c = to_eigenbasis(spec, rho_power_);
    double q = 0.0;
    for (std::size_t k = 0; k < n_; ++k) q += std::real(c(k, k)) * detail::floored_power(spec.eigenvalues[k], e, floor_);
    const double value = detail::log_ratio_divergence(q, a);
    if (!std::isfinite(value)) return value;
    if (grad) {
      apply_divided_differences(
          spec.eigenvalues, c, [e](double x) { return std::pow(x, e); },
          [e](double x) { return e * std::pow(x, e - 1.0); });
      *grad = from_eigenbasis(spec, c);
      *grad *= 1.0 / ((a - 1.0) * q);
    }
    return value;
  }

  double sandwiched(const SpectralDecomposition& spec, const ComplexMatrix& /*sigma*/, ComplexMatrix* grad) const {
    const double a = p_.alpha;
    const double s = (1.0 - a) / (2.0 * a);
    const ComplexMatrix root = detail::spectral_power(spec, s, floor_);
    const ComplexMatrix rho_root = rho_ * root;
    ComplexMatrix m = root * rho_root;
    m = hermitian_part(m);
    const SpectralDecomposition mspec = detail::jacobi_eigen(m);
    const double mu_max = std::max(mspec.eigenvalues.back(), 0.0);
    const double q = detail::power_trace(mspec.eigenvalues, a);
    const double value = detail::log_ratio_divergence(q, a);
    if (!std::isfinite(value)) return value;
    if (grad) {
      // dQ = Tr[P dM], P = alpha M^(alpha-1) on the support of M;
      // dM = dA rho A + A rho dA  =>  dQ = Tr[B dA], B = rho A P + P A rho.
      std::vector<double> pw(n_);
      for (std::size_t k = 0; k < n_; ++k) {
        const double mu = mspec.eigenvalues[k];
        pw[k] = mu > 1e-12 * mu_max ? a * std::pow(mu, a - 1.0) : 0.0;
      }
      const ComplexMatrix pmat = mspec.reconstruct(pw);
      ComplexMatrix b = rho_root * pmat;
      b += b.adjoint();
      ComplexMatrix c = to_eigenbasis(spec, b);
      apply_divided_differences(
          spec.eigenvalues, c, [s](double x) { return std::pow(x, s); },
          [s](double x) { return s * std::pow(x, s - 1.0); });
      *grad = from_eigenbasis(spec, c);
      *grad *= 1.0 / ((a - 1.0) * q);
    }
    return value;
  }

  ComplexMatrix rho_;
  RenyiParameter p_;
  double floor_;
  std::size_t n_;
  double neg_entropy_ = 0.0;
  ComplexMatrix rho_power_;
};

}  // namespace renyient
