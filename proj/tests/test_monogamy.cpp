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

#include <gtest/gtest.h>

#include "renyient/monogamy.hpp"
#include "renyient/statezoo.hpp"

namespace renyient {
namespace {

OptimizerOptions quick(int restarts = 4) {
  OptimizerOptions o;
  o.restarts = restarts;
  o.seed = 2;
  return o;
}

TEST(Monogamy, AssemblyInvariant) {
  const auto r = monogamy(w().density(), RenyiParameter::sandwiched(2.0), quick());
  EXPECT_NEAR(r.m, r.e_1_23().nats - r.e_1_2().nats - r.e_1_3().nats, 1e-12);
  EXPECT_EQ(r.monogamous(), r.m >= 0.0);
}

TEST(Monogamy, GhzHasSeparablePairs) {
  for (auto p : {RenyiParameter::traditional(0.7), RenyiParameter::traditional(1.0), RenyiParameter::sandwiched(4.0)}) {
    const auto r = monogamy(ghz().density(), p, quick());
    EXPECT_LE(r.e_1_2().nats, 1e-4) << p.alpha;
    EXPECT_LE(r.e_1_3().nats, 1e-4) << p.alpha;
    EXPECT_GT(r.m, 0.0) << p.alpha;
  }
}

TEST(Monogamy, WIsMonogamousAtAlphaOne) {
  const auto r = monogamy(w().density(), RenyiParameter::traditional(1.0), quick());
  EXPECT_GT(r.e_1_23().nats, 0.0);
  EXPECT_GT(r.e_1_2().nats, 0.0);
  EXPECT_GT(r.e_1_3().nats, 0.0);
  EXPECT_GT(r.m, 0.0);
  EXPECT_TRUE(r.converged());
}

TEST(Monogamy, StarIsPolygamousForLargeSandwichedAlpha) {
  EXPECT_LT(monogamy(star().density(), RenyiParameter::sandwiched(4.0), quick(8)).m, 0.0);
}

TEST(Monogamy, Deterministic) {
  const auto a = monogamy(star().density(), RenyiParameter::traditional(1.5), quick(2));
  const auto b = monogamy(star().density(), RenyiParameter::traditional(1.5), quick(2));
  EXPECT_EQ(a.m, b.m);
}

TEST(Monogamy, Errors) {
  EXPECT_THROW(monogamy(DensityMatrix::maximally_mixed(4), RenyiParameter::traditional(1.0), quick()), DimensionError);
  EXPECT_THROW(monogamy(ghz().density(), RenyiParameter::traditional(3.0), quick()), RangeError);
}

TEST(CriticalTemperature, RisesWithAnisotropy) {
  CriticalTemperatureOptions ct;
  ct.t_min = 0.1;
  ct.t_max = 6.0;
  ct.resolution = 14;
  ct.bisection_steps = 6;
  const auto p = RenyiParameter::traditional(1.0);
  const auto low = critical_temperature(ModelParams::xxz(1.0, 0.5), p, quick(), ct);
  const auto high = critical_temperature(ModelParams::xxz(1.0, 1.0), p, quick(), ct);
  ASSERT_TRUE(low.has_value());
  ASSERT_TRUE(high.has_value());
  EXPECT_GT(*high, *low);
}

TEST(CriticalTemperature, Sentinels) {
  CriticalTemperatureOptions cold;
  cold.t_min = 0.05;
  cold.t_max = 0.1;
  cold.resolution = 4;
  EXPECT_FALSE(critical_temperature(ModelParams::xxz(1.0, 1.0), RenyiParameter::traditional(1.0), quick(2), cold));
  CriticalTemperatureOptions hot;
  hot.t_min = 50.0;
  hot.t_max = 60.0;
  hot.resolution = 4;
  const auto t = critical_temperature(ModelParams::xxz(1.0, 1.0), RenyiParameter::traditional(1.0), quick(2), hot);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, 50.0);
}

TEST(CriticalTemperature, RejectsBadRanges) {
  CriticalTemperatureOptions ct;
  ct.t_min = 2.0;
  ct.t_max = 1.0;
  EXPECT_THROW(critical_temperature(ModelParams::tfi(1.0), RenyiParameter::traditional(1.0), quick(), ct), RangeError);
  ct = {};
  ct.resolution = 3;
  EXPECT_THROW(critical_temperature(ModelParams::tfi(1.0), RenyiParameter::traditional(1.0), quick(), ct), RangeError);
}

}  // namespace
}  // namespace renyient
