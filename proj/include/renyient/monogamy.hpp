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

// Three-qubit monogamy M = E(1:23) - E(1:2) - E(1:3) and critical temperatures.

#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "renyient/error.hpp"
#include "renyient/qmat.hpp"
#include "renyient/renyi.hpp"
#include "renyient/sepstates.hpp"
#include "renyient/spinchain.hpp"

namespace renyient {

struct MonogamyResult {
  REEResult r_1_23;
  REEResult r_1_2;
  REEResult r_1_3;
  double m = 0.0;  // nats

  EntropyValue e_1_23() const { return r_1_23.value; }
  EntropyValue e_1_2() const { return r_1_2.value; }
  EntropyValue e_1_3() const { return r_1_3.value; }
  bool converged() const { return r_1_23.converged && r_1_2.converged && r_1_3.converged; }
  bool monogamous() const { return m >= 0.0; }
};

/// Seeds of the three REE problems are derived from opts.seed so each cut
/// gets an independent restart sequence.
inline MonogamyResult monogamy(const DensityMatrix& rho3, RenyiParameter p, const OptimizerOptions& opts = {}) {
  if (rho3.dim() != 8) throw DimensionError("monogamy: expected a three-qubit (8x8) state");
  p.validate();
  OptimizerOptions o = opts;
  o.seed = mix_seed(opts.seed, 0);
  REEResult r123 = ree(rho3, Bipartition{2, 4}, p, o);
  o.seed = mix_seed(opts.seed, 1);
  REEResult r12 = ree(partial_trace(rho3, {2, 2, 2}, {0, 1}), Bipartition{2, 2}, p, o);
  o.seed = mix_seed(opts.seed, 2);
  REEResult r13 = ree(partial_trace(rho3, {2, 2, 2}, {0, 2}), Bipartition{2, 2}, p, o);
  const double m = r123.value.nats - r12.value.nats - r13.value.nats;
  return MonogamyResult{std::move(r123), std::move(r12), std::move(r13), m};
}

inline constexpr double kEntanglementZeroThreshold = 1e-4;

struct CriticalTemperatureOptions {
  double t_min = 0.05;
  double t_max = 5.0;
  int resolution = 32;  // grid points including both ends, >= 4
  double threshold = kEntanglementZeroThreshold;
  int bisection_steps = 10;  // final bracket width (t_max - t_min) / 2^steps
};

/// E(1:23) of the Gibbs state of `params` at temperature t.
inline EntropyValue thermal_entanglement(const ModelParams& params, double t, RenyiParameter p,
                                         const OptimizerOptions& opts) {
  return ree(thermal_state(params, t).rho, Bipartition{2, 4}, p, opts).value;
}

/// Smallest temperature at which E(1:23) falls below the threshold: the first
/// grid point below threshold, refined by bisection against its predecessor.
/// std::nullopt when E stays above the threshold on the whole range. A grid
/// that starts below threshold returns t_min.
inline std::optional<double> critical_temperature(const ModelParams& params, RenyiParameter p,
                                                  const OptimizerOptions& opts,
                                                  const CriticalTemperatureOptions& ct = {}) {
  params.validate();
  p.validate();
  if (!(ct.t_min > 0.0) || !(ct.t_max > ct.t_min)) throw RangeError("critical_temperature: need 0 < t_min < t_max");
  if (ct.resolution < 4) throw RangeError("critical_temperature: resolution must be >= 4");
  if (ct.bisection_steps < 0) throw RangeError("critical_temperature: bisection_steps must be >= 0");
  auto below = [&](double t) { return thermal_entanglement(params, t, p, opts).nats < ct.threshold; };

  const double step = (ct.t_max - ct.t_min) / (ct.resolution - 1);
  double prev = ct.t_min;
  if (below(prev)) return prev;
  for (int i = 1; i < ct.resolution; ++i) {
    const double t = i + 1 == ct.resolution ? ct.t_max : ct.t_min + i * step;
    if (below(t)) {
      double lo = prev, hi = t;
      const double width = (ct.t_max - ct.t_min) / std::ldexp(1.0, ct.bisection_steps);
      while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        (below(mid) ? hi : lo) = mid;
      }
      return hi;
    }
    prev = t;
  }
  return std::nullopt;
}

}  // namespace renyient
