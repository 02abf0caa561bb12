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

// Three-site periodic spin chains, their Gibbs states, and closed-form
// spectra / thermal matrices used to cross-check exact diagonalization.
//
// Conventions: sigma_z = diag(1, -1); site 1 is the leftmost tensor factor;
// basis index 0 is |000>. k_B = 1 and energies share the coupling units.

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "renyient/error.hpp"
#include "renyient/qmat.hpp"
#include "renyient/statezoo.hpp"

namespace renyient {

enum class Model { XYZ, XXZ, XY, TFI };

inline std::string_view to_string(Model m) {
  switch (m) {
    case Model::XYZ: return "XYZ";
    case Model::XXZ: return "XXZ";
    case Model::XY: return "XY";
    case Model::TFI: return "TFI";
  }
  return "?";
}

inline std::optional<Model> parse_model(std::string_view s) {
  std::string u(s);
  for (auto& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "XYZ") return Model::XYZ;
  if (u == "XXZ") return Model::XXZ;
  if (u == "XY") return Model::XY;
  if (u == "TFI" || u == "ISING") return Model::TFI;
  return std::nullopt;
}

/// Model selector plus couplings. Only the fields relevant to `model` are read:
/// XYZ uses jx, jy, jz; XXZ uses j, delta; XY uses j, gamma; TFI uses lambda.
struct ModelParams {
  Model model = Model::XYZ;
  double jx = 1.0, jy = 1.0, jz = 1.0;
  double j = 1.0;
  double delta = 1.0;
  double gamma = 0.0;
  double lambda = 1.0;

  static ModelParams xyz(double jx, double jy, double jz) {
    ModelParams p;
    p.model = Model::XYZ;
    p.jx = jx;
    p.jy = jy;
    p.jz = jz;
    return p;
  }
  static ModelParams xxz(double j, double delta) {
    ModelParams p;
    p.model = Model::XXZ;
    p.j = j;
    p.delta = delta;
    return p;
  }
  static ModelParams xy(double j, double gamma) {
    ModelParams p;
    p.model = Model::XY;
    p.j = j;
    p.gamma = gamma;
    return p;
  }
  static ModelParams tfi(double lambda) {
    ModelParams p;
    p.model = Model::TFI;
    p.lambda = lambda;
    return p;
  }

  void validate() const {
    auto finite = [](double v, const char* name) {
      if (!std::isfinite(v)) throw RangeError(std::string("model parameter ") + name + " must be finite");
    };
    switch (model) {
      case Model::XYZ:
        finite(jx, "jx");
        finite(jy, "jy");
        finite(jz, "jz");
        break;
      case Model::XXZ:
        finite(j, "j");
        finite(delta, "delta");
        if (!(delta > -1.0)) throw RangeError("XXZ requires delta > -1");
        break;
      case Model::XY:
        finite(j, "j");
        finite(gamma, "gamma");
        if (gamma < 0.0 || gamma > 1.0) throw RangeError("XY requires 0 <= gamma <= 1");
        break;
      case Model::TFI:
        finite(lambda, "lambda");
        break;
    }
  }

  /// (Jx, Jy, Jz) of the equivalent XYZ chain. Not defined for TFI.
  std::array<double, 3> heisenberg_couplings() const {
    switch (model) {
      case Model::XYZ: return {jx, jy, jz};
      case Model::XXZ: return {j, j, j * delta};
      case Model::XY: return {j * (1.0 + gamma) / 2.0, j * (1.0 - gamma) / 2.0, 0.0};
      case Model::TFI: break;
    }
    throw RangeError("heisenberg_couplings: TFI is not a Heisenberg-type chain");
  }

  /// Parameter names accepted by get/set for this model ("temp" is handled by callers).
  static bool is_parameter_name(std::string_view name) {
    return name == "jx" || name == "jy" || name == "jz" || name == "j" || name == "delta" || name == "gamma" ||
           name == "lambda";
  }

  double get(std::string_view name) const {
    if (name == "jx") return jx;
    if (name == "jy") return jy;
    if (name == "jz") return jz;
    if (name == "j") return j;
    if (name == "delta") return delta;
    if (name == "gamma") return gamma;
    if (name == "lambda") return lambda;
    throw RangeError("unknown model parameter '" + std::string(name) + "'");
  }

  void set(std::string_view name, double value) {
    if (name == "jx") jx = value;
    else if (name == "jy") jy = value;
    else if (name == "jz") jz = value;
    else if (name == "j") j = value;
    else if (name == "delta") delta = value;
    else if (name == "gamma") gamma = value;
    else if (name == "lambda") lambda = value;
    else throw RangeError("unknown model parameter '" + std::string(name) + "'");
  }

  /// Whether `name` is a coupling this model actually reads.
  bool uses(std::string_view name) const {
    switch (model) {
      case Model::XYZ: return name == "jx" || name == "jy" || name == "jz";
      case Model::XXZ: return name == "j" || name == "delta";
      case Model::XY: return name == "j" || name == "gamma";
      case Model::TFI: return name == "lambda";
    }
    return false;
  }
};

namespace detail {

/// Operator `op` acting on `site` (0-based) of a three-qubit register.
inline ComplexMatrix on_site(const ComplexMatrix& op, std::size_t site) {
  const ComplexMatrix id = pauli::i2();
  ComplexMatrix out = site == 0 ? op : id;
  for (std::size_t s = 1; s < 3; ++s) out = kron(out, s == site ? op : id);
  return out;
}

/// sum over periodic bonds (1,2), (2,3), (3,1) of op_i op_{i+1}
inline ComplexMatrix bond_sum(const ComplexMatrix& op) {
  ComplexMatrix h(8, 8);
  for (std::size_t s = 0; s < 3; ++s) h += on_site(op, s) * on_site(op, (s + 1) % 3);
  return h;
}

}  // namespace detail

/// 8x8 Hamiltonian of the periodic three-site chain.
/// Heisenberg family: sum Jx XX + Jy YY + Jz ZZ. TFI: lambda sum XX + sum Z.
inline ComplexMatrix hamiltonian(const ModelParams& params) {
  params.validate();
  if (params.model == Model::TFI) {
    ComplexMatrix h = detail::bond_sum(pauli::x()) * params.lambda;
    for (std::size_t s = 0; s < 3; ++s) h += detail::on_site(pauli::z(), s);
    return h;
  }
  const auto [jx, jy, jz] = params.heisenberg_couplings();
  ComplexMatrix h = detail::bond_sum(pauli::x()) * jx;
  h += detail::bond_sum(pauli::y()) * jy;
  h += detail::bond_sum(pauli::z()) * jz;
  return hermitian_part(h);
}

/// Cyclic site permutation |s1 s2 s3> -> |s3 s1 s2>.
inline ComplexMatrix site_shift() {
  ComplexMatrix p(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t b1 = (i >> 2) & 1u, b2 = (i >> 1) & 1u, b3 = i & 1u;
    p((b3 << 2) | (b1 << 1) | b2, i) = 1.0;
  }
  return p;
}

struct ThermalState {
  DensityMatrix rho;
  double temperature;
  double beta;
  double log_partition;  // ln Z

  double partition_function() const { return std::exp(log_partition); }
};

/// exp(-H/T) / Z by exact diagonalization. Energies are shifted by the ground
/// energy before exponentiation so low temperatures do not underflow.
inline ThermalState thermal_state(const ComplexMatrix& h, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw RangeError("thermal_state: temperature must be positive and finite");
  const SpectralDecomposition spec = eig_hermitian(h);
  const double beta = 1.0 / t;
  const double e0 = spec.eigenvalues.front();
  std::vector<double> w(spec.eigenvalues.size());
  double total = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) total += (w[k] = std::exp(-beta * (spec.eigenvalues[k] - e0)));
  for (auto& x : w) x /= total;
  return ThermalState{DensityMatrix(hermitian_part(spec.reconstruct(w))), t, beta, -beta * e0 + std::log(total)};
}

inline ThermalState thermal_state(const ModelParams& params, double t) { return thermal_state(hamiltonian(params), t); }

// ---------------------------------------------------------------------------
// Closed forms

/// Elements of the XYZ thermal matrix. Index layout (0-based basis index):
///   u = rho(0,0), v = rho(7,7), w1 = rho(1,1) = rho(2,2) = rho(4,4),
///   w2 = rho(3,3) = rho(5,5) = rho(6,6), y1 couples {1,2,4}, y2 couples {3,5,6},
///   q1 couples 0 with {3,5,6}, q2 couples 7 with {1,2,4}; all before division by Z.
struct XYZAnalytic {
  std::array<double, 8> eigenvalues;
  double phi0, phi1, eta, x;
  double u, v, w1, w2, y1, y2, q1, q2;
  Complex q;
  double partition_function;
};

struct TFIAnalytic {
  double eta1, eta2, phi0, phi1;
  double u, v, w1, w2, y1, y2, q1, q2;
  double partition_function;
};

namespace detail {

/// Fills the shared sparsity pattern of the XYZ / TFI thermal matrices.
inline ComplexMatrix assemble_pattern(double u, double v, double w1, double w2, double y1, double y2, double q1,
                                      double q2) {
  ComplexMatrix m(8, 8);
  const std::array<std::size_t, 3> odd{1, 2, 4}, even{3, 5, 6};
  m(0, 0) = u;
  m(7, 7) = v;
  for (std::size_t a : odd) {
    m(a, a) = w1;
    m(7, a) = m(a, 7) = q2;
    for (std::size_t b : odd)
      if (a != b) m(a, b) = y1;
  }
  for (std::size_t a : even) {
    m(a, a) = w2;
    m(0, a) = m(a, 0) = q1;
    for (std::size_t b : even)
      if (a != b) m(a, b) = y2;
  }
  return m;
}

}  // namespace detail

/// Mixing angle of the {|000>, symmetric two-excitation} block for an XYZ chain.
/// Written so the Jx = Jy limit is exact on both sides of 2Jz = Jx + Jy.
inline double xyz_mixing_angle(double jx, double jy, double jz) {
  const double a = std::sqrt(3.0) * (jx - jy);
  const double d = 2.0 * jz - (jx + jy);
  const double eta = std::sqrt(a * a + d * d);
  return d >= 0.0 ? std::atan2(a, d + eta) : std::atan2(eta - d, a);
}

/// Closed-form thermal state of a Heisenberg-type chain (XYZ, or XXZ / XY via
/// their XYZ couplings).
inline std::pair<DensityMatrix, XYZAnalytic> xyz_analytic(const ModelParams& params, double t) {
  params.validate();
  if (!(t > 0.0)) throw RangeError("xyz_analytic: temperature must be positive");
  const auto [jx, jy, jz] = params.heisenberg_couplings();
  const double sum = jx + jy + jz;
  const double eta = std::sqrt(3.0 * (jx - jy) * (jx - jy) + std::pow(jx + jy - 2.0 * jz, 2));
  const double phi0 = xyz_mixing_angle(jx, jy, jz);
  // The second mixing angle coincides with the first for every coupling set.
  const double phi1 = phi0;
  const double x = std::exp(-sum / t);
  const double em = std::exp(-eta / t), ep = std::exp(eta / t);
  const double c0 = std::cos(phi0), s0 = std::sin(phi0), c1 = std::cos(phi1), s1 = std::sin(phi1);

  XYZAnalytic a{};
  a.eigenvalues = {sum + eta, -sum, -sum, sum - eta, -sum, -sum, sum - eta, sum + eta};
  a.phi0 = phi0;
  a.phi1 = phi1;
  a.eta = eta;
  a.x = x;
  a.q = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  a.u = x * (em * c0 * c0 + ep * s0 * s0);
  a.v = x * (em * c1 * c1 + ep * s1 * s1);
  a.w1 = x / 3.0 * (2.0 / (x * x) + em * s1 * s1 + ep * c1 * c1);
  a.w2 = x / 3.0 * (2.0 / (x * x) + em * s0 * s0 + ep * c0 * c0);
  a.y1 = x / 3.0 * (-1.0 / (x * x) + em * s1 * s1 + ep * c1 * c1);
  a.y2 = x / 3.0 * (-1.0 / (x * x) + em * s0 * s0 + ep * c0 * c0);
  a.q1 = -2.0 / std::sqrt(3.0) * x * c0 * s0 * std::sinh(eta / t);
  a.q2 = -2.0 / std::sqrt(3.0) * x * c1 * s1 * std::sinh(eta / t);
  a.partition_function = 4.0 / x + 4.0 * x * std::cosh(eta / t);

  ComplexMatrix m = detail::assemble_pattern(a.u, a.v, a.w1, a.w2, a.y1, a.y2, a.q1, a.q2);
  m *= 1.0 / a.partition_function;
  return {DensityMatrix(m), a};
}

/// Z = 4/x + 4x cosh(eta/T), x = exp(-(Jx+Jy+Jz)/T).
inline double xyz_partition_function(const ModelParams& params, double t) {
  const auto [jx, jy, jz] = params.heisenberg_couplings();
  const double eta = std::sqrt(3.0 * (jx - jy) * (jx - jy) + std::pow(jx + jy - 2.0 * jz, 2));
  const double x = std::exp(-(jx + jy + jz) / t);
  return 4.0 / x + 4.0 * x * std::cosh(eta / t);
}

struct XXZSpectrum {
  std::array<double, 8> eigenvalues;
  std::array<ComplexVector, 8> eigenvectors;
};

/// Closed-form XXZ eigenpairs: the two aligned states, the symmetric W-like
/// states, and the four q-phase states with q = exp(2 pi i / 3).
inline XXZSpectrum xxz_spectrum(const ModelParams& params) {
  if (params.model != Model::XXZ) throw RangeError("xxz_spectrum: XXZ parameters required");
  params.validate();
  const double j = params.j, d = params.delta;
  const Complex q = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex q2 = q * q;
  const double r = 1.0 / std::sqrt(3.0);
  auto vec = [](std::initializer_list<std::pair<std::size_t, Complex>> entries) {
    ComplexVector v(8, 0.0);
    for (auto [i, z] : entries) v[i] = z;
    return v;
  };
  XXZSpectrum s;
  s.eigenvalues = {3 * j * d,
                   -2 * j * (d / 2 + 1),
                   -2 * j * (d / 2 + 1),
                   -2 * j * (d / 2 - 2),
                   -2 * j * (d / 2 + 1),
                   -2 * j * (d / 2 + 1),
                   -2 * j * (d / 2 - 2),
                   3 * j * d};
  s.eigenvectors = {vec({{0, 1.0}}),
                    vec({{1, q * r}, {2, q2 * r}, {4, r}}),
                    vec({{1, q2 * r}, {2, q * r}, {4, r}}),
                    vec({{1, r}, {2, r}, {4, r}}),
                    vec({{6, q * r}, {5, q2 * r}, {3, r}}),
                    vec({{6, q2 * r}, {5, q * r}, {3, r}}),
                    vec({{6, r}, {5, r}, {3, r}}),
                    vec({{7, 1.0}})};
  return s;
}

/// Z = 2 exp(-3 J Delta / T) + 2 exp(J Delta / T) (2 exp(2J/T) + exp(-4J/T)).
inline double xxz_partition_function(const ModelParams& params, double t) {
  const double j = params.j, d = params.delta;
  return 2.0 * std::exp(-3.0 * j * d / t) + 2.0 * std::exp(j * d / t) * (2.0 * std::exp(2.0 * j / t) + std::exp(-4.0 * j / t));
}

/// Closed-form TFI thermal state with unit field (J = lambda, B = 1).
inline std::pair<DensityMatrix, TFIAnalytic> tfi_analytic(const ModelParams& params, double t) {
  if (params.model != Model::TFI) throw RangeError("tfi_analytic: TFI parameters required");
  params.validate();
  if (!(t > 0.0)) throw RangeError("tfi_analytic: temperature must be positive");
  const double l = params.lambda;
  TFIAnalytic a{};
  a.eta1 = 2.0 * std::sqrt(1.0 - l + l * l);
  a.eta2 = 2.0 * std::sqrt(1.0 + l + l * l);
  a.phi0 = std::atan2(std::sqrt(3.0) * l, 2.0 - l + a.eta1);
  a.phi1 = std::atan2(2.0 + l + a.eta2, std::sqrt(3.0) * l);
  const double ep = std::exp(-(l + 1.0) / t);  // e^{-(J+B)/T}
  const double em = std::exp(-(l - 1.0) / t);  // e^{-(J-B)/T}
  const double c0 = std::cos(a.phi0), s0 = std::sin(a.phi0), c1 = std::cos(a.phi1), s1 = std::sin(a.phi1);
  const double e1m = std::exp(-a.eta1 / t), e1p = std::exp(a.eta1 / t);
  const double e2m = std::exp(-a.eta2 / t), e2p = std::exp(a.eta2 / t);
  a.u = ep * (e1m * c0 * c0 + e1p * s0 * s0);
  a.v = em * (e2m * c1 * c1 + e2p * s1 * s1);
  a.w1 = em / 3.0 * (2.0 * std::exp(2.0 * (l - 1.0) / t) + e2p * c1 * c1 + e2m * s1 * s1);
  a.w2 = ep / 3.0 * (2.0 * std::exp(2.0 * (l + 1.0) / t) + e1p * c0 * c0 + e1m * s0 * s0);
  a.y1 = em / 3.0 * (-std::exp(2.0 * (l - 1.0) / t) + e2p * c1 * c1 + e2m * s1 * s1);
  a.y2 = ep / 3.0 * (-std::exp(2.0 * (l + 1.0) / t) + e1p * c0 * c0 + e1m * s0 * s0);
  a.q1 = -2.0 / std::sqrt(3.0) * ep * c0 * s0 * std::sinh(a.eta1 / t);
  a.q2 = -2.0 / std::sqrt(3.0) * em * c1 * s1 * std::sinh(a.eta2 / t);
  a.partition_function = 4.0 * std::exp(l / t) * std::cosh(1.0 / t) + 2.0 * ep * std::cosh(a.eta1 / t) +
                         2.0 * em * std::cosh(a.eta2 / t);
  ComplexMatrix m = detail::assemble_pattern(a.u, a.v, a.w1, a.w2, a.y1, a.y2, a.q1, a.q2);
  m *= 1.0 / a.partition_function;
  return {DensityMatrix(m), a};
}

inline double tfi_partition_function(const ModelParams& params, double t) {
  const double l = params.lambda;
  const double eta1 = 2.0 * std::sqrt(1.0 - l + l * l);
  const double eta2 = 2.0 * std::sqrt(1.0 + l + l * l);
  return 4.0 * std::exp(l / t) * std::cosh(1.0 / t) + 2.0 * std::exp(-(l + 1.0) / t) * std::cosh(eta1 / t) +
         2.0 * std::exp(-(l - 1.0) / t) * std::cosh(eta2 / t);
}

/// Closed-form Z for any model.
inline double analytic_partition_function(const ModelParams& params, double t) {
  params.validate();
  if (!(t > 0.0)) throw RangeError("analytic_partition_function: temperature must be positive");
  switch (params.model) {
    case Model::XXZ: return xxz_partition_function(params, t);
    case Model::TFI: return tfi_partition_function(params, t);
    default: return xyz_partition_function(params, t);
  }
}

/// Minimum spectral gap accepted by ground_state.
inline constexpr double kGroundGapTolerance = 1e-10;

/// Lowest eigenvector of an 8x8 Hamiltonian, phase-fixed so its first
/// nonzero amplitude is real and positive. Refuses degenerate ground levels.
inline PureState3 ground_state(const ComplexMatrix& h) {
  if (h.rows() != 8 || h.cols() != 8) throw DimensionError("ground_state: expected an 8x8 Hamiltonian");
  const SpectralDecomposition spec = eig_hermitian(h);
  const double gap = spec.eigenvalues[1] - spec.eigenvalues[0];
  if (gap <= kGroundGapTolerance)
    throw DegenerateGroundStateError("ground_state: ground level is degenerate (gap " + std::to_string(gap) + ")",
                                     gap);
  ComplexVector v = spec.eigenvector(0);
  Complex phase = 1.0;
  for (const auto& z : v)
    if (std::abs(z) > 1e-12) {
      phase = std::conj(z) / std::abs(z);
      break;
    }
  std::array<Complex, 8> a{};
  const double n = norm(v);
  for (std::size_t i = 0; i < 8; ++i) a[i] = v[i] * phase / n;
  return PureState3(a);
}

}  // namespace renyient
