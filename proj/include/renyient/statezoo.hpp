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

// Canonical three-qubit pure states and their closed-form two-qubit reductions.
// Basis order |000>, |001>, ..., |111> with qubit 1 the leftmost factor.

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "renyient/error.hpp"
#include "renyient/qmat.hpp"

namespace renyient {

class PureState3 {
 public:
  explicit PureState3(const std::array<Complex, 8>& amplitudes) : amp_(amplitudes) {
    if (std::abs(norm(std::span<const Complex>(amp_)) - 1.0) > 1e-12) throw InvalidStateError("PureState3: amplitudes are not normalized");
  }

  const std::array<Complex, 8>& amplitudes() const noexcept { return amp_; }
  Complex operator[](std::size_t i) const { return amp_.at(i); }
  std::span<const Complex> span() const noexcept { return amp_; }
  ComplexVector vector() const { return {amp_.begin(), amp_.end()}; }
  DensityMatrix density() const { return DensityMatrix::pure(amp_); }

  /// Reduced state of qubits {1,2} (pair 12) or {1,3} (pair 13).
  DensityMatrix reduced(int pair) const {
    if (pair == 12) return partial_trace(density(), {2, 2, 2}, {0, 1});
    if (pair == 13) return partial_trace(density(), {2, 2, 2}, {0, 2});
    if (pair == 23) return partial_trace(density(), {2, 2, 2}, {1, 2});
    throw RangeError("PureState3::reduced: pair must be 12, 13 or 23");
  }

 private:
  std::array<Complex, 8> amp_;
};

namespace detail {
inline PureState3 scaled(std::array<double, 8> a, double scale) {
  std::array<Complex, 8> out{};
  for (std::size_t i = 0; i < 8; ++i) out[i] = a[i] * scale;
  return PureState3(out);
}
}  // namespace detail

/// (|000> + |111>) / sqrt 2
inline PureState3 ghz() { return detail::scaled({1, 0, 0, 0, 0, 0, 0, 1}, 1.0 / std::numbers::sqrt2); }

/// (|001> + |010> + |100>) / sqrt 3
inline PureState3 w() { return detail::scaled({0, 1, 1, 0, 1, 0, 0, 0}, 1.0 / std::numbers::sqrt3); }

/// (|000> + |001> + |101> + |111>) / 2
inline PureState3 star() { return detail::scaled({1, 1, 0, 0, 0, 1, 0, 1}, 0.5); }

/// (|011> + |101> + |110>) / sqrt 3
inline PureState3 wbar() { return detail::scaled({0, 0, 0, 1, 0, 1, 1, 0}, 1.0 / std::numbers::sqrt3); }

/// sin(phi)|000> + cos(phi)/sqrt3 (|011> + |101> + |110>)
inline PureState3 tfi_ground(double phi) {
  const double s = std::sin(phi);
  const double c = std::cos(phi) / std::numbers::sqrt3;
  std::array<Complex, 8> a{};
  a[0] = s;
  a[3] = a[5] = a[6] = c;
  return PureState3(a);
}

/// Closed-form reduction of the star state:
/// (2+sqrt2)/4 |s+><s+| + (2-sqrt2)/4 |s-><s-| with
/// s12 = (|00> +- |1+>)/sqrt2 and s13 = (|0+> +- |11>)/sqrt2.
inline DensityMatrix star_reduced(int pair) {
  const double r = 1.0 / std::numbers::sqrt2;
  // |00>, |1+>, |0+>, |11> as two-qubit vectors
  const ComplexVector e00{1, 0, 0, 0};
  const ComplexVector e1p{0, 0, r, r};
  const ComplexVector e0p{r, r, 0, 0};
  const ComplexVector e11{0, 0, 0, 1};
  const ComplexVector* first = nullptr;
  const ComplexVector* second = nullptr;
  if (pair == 12) {
    first = &e00;
    second = &e1p;
  } else if (pair == 13) {
    first = &e0p;
    second = &e11;
  } else {
    throw RangeError("star_reduced: pair must be 12 or 13");
  }
  ComplexVector plus(4), minus(4);
  for (std::size_t i = 0; i < 4; ++i) {
    plus[i] = r * ((*first)[i] + (*second)[i]);
    minus[i] = r * ((*first)[i] - (*second)[i]);
  }
  ComplexMatrix m = ComplexMatrix::outer(plus) * ((2.0 + std::numbers::sqrt2) / 4.0);
  m += ComplexMatrix::outer(minus) * ((2.0 - std::numbers::sqrt2) / 4.0);
  return DensityMatrix(m);
}

/// Closed-form reduction of the W state: 1/3 |00><00| + 2/3 |Psi+><Psi+|, Psi+ = (|01>+|10>)/sqrt2.
inline DensityMatrix w_reduced() {
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexMatrix m = ComplexMatrix::outer(ComplexVector{1, 0, 0, 0}) * (1.0 / 3.0);
  m += ComplexMatrix::outer(ComplexVector{0, r, r, 0}) * (2.0 / 3.0);
  return DensityMatrix(m);
}

struct TwoLevelEigensystem {
  std::array<double, 2> weights;
  std::array<ComplexVector, 2> vectors;
};

/// Spectrum of the two-qubit reduction of tfi_ground(phi):
/// weight sin^2 + cos^2/3 on v1 = (sin|00> + cos/sqrt3 |11>) / sqrt(sin^2 + cos^2/3)
/// and weight 2cos^2/3 on v2 = (|01> + |10>)/sqrt2.
inline TwoLevelEigensystem tfi_reduced_eigensystem(double phi) {
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  const double w1 = s * s + c * c / 3.0;
  const double n1 = std::sqrt(w1);
  const double r = 1.0 / std::numbers::sqrt2;
  return {{w1, 2.0 * c * c / 3.0},
          {ComplexVector{s / n1, 0, 0, c / std::numbers::sqrt3 / n1}, ComplexVector{0, r, r, 0}}};
}

}  // namespace renyient
