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

#include <cmath>
#include <random>

#include "renyient/sepstates.hpp"
#include "renyient/statezoo.hpp"

namespace renyient {
namespace {

const double kLn2 = std::log(2.0);

ComplexVector basis(std::size_t dim, std::size_t i) {
  ComplexVector v(dim);
  v[i] = 1.0;
  return v;
}

DensityMatrix bell() {
  const double s = 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(ComplexVector{s, 0, 0, s});
}

OptimizerOptions quick(int restarts = 4, std::uint64_t seed = 1) {
  OptimizerOptions o;
  o.restarts = restarts;
  o.seed = seed;
  return o;
}

TEST(Realize, SingleProductTerm) {
  SeparableAnsatz a{{2, 4}, {0.3}, {basis(2, 0)}, {basis(4, 0)}};
  const auto sigma = realize(a);
  ComplexMatrix expect(8, 8);
  expect(0, 0) = 1.0;
  EXPECT_LE(max_abs_diff(sigma.matrix(), expect), 1e-15);
}

TEST(Realize, ClassicalMixtureOfAlignedStates) {
  SeparableAnsatz a{{2, 4}, {0.0, 0.0}, {basis(2, 0), basis(2, 1)}, {basis(4, 0), basis(4, 3)}};
  ComplexMatrix expect(8, 8);
  expect(0, 0) = expect(7, 7) = 0.5;
  EXPECT_LE(max_abs_diff(realize(a).matrix(), expect), 1e-15);
}

TEST(Realize, LogitShiftInvariance) {
  std::mt19937_64 rng(5);
  auto a = random_ansatz({2, 2}, 5, rng);
  auto b = a;
  for (auto& l : b.logits) l += 3.7;
  EXPECT_LE(max_abs_diff(realize(a).matrix(), realize(b).matrix()), 1e-14);
}

TEST(Realize, UnnormalizedVectorsAreNormalized) {
  SeparableAnsatz a{{2, 2}, {0.0}, {ComplexVector{3.0, 0.0}}, {ComplexVector{0.0, Complex(0, 2)}}};
  EXPECT_NEAR(realize(a).matrix()(1, 1).real(), 1.0, 1e-15);
}

TEST(Realize, WeightsArePositiveAndNormalized) {
  std::mt19937_64 rng(6);
  const auto a = random_ansatz({2, 4}, 32, rng);
  double s = 0.0;
  for (double w : a.weights()) {
    EXPECT_GT(w, 0.0);
    s += w;
  }
  EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(Realize, Errors) {
  SeparableAnsatz zero{{2, 2}, {0.0}, {ComplexVector{0.0, 0.0}}, {basis(2, 0)}};
  EXPECT_THROW(realize(zero), InvalidStateError);
  SeparableAnsatz wrong{{2, 2}, {0.0}, {basis(3, 0)}, {basis(2, 0)}};
  EXPECT_THROW(realize(wrong), DimensionError);
}

TEST(Options, Validation) {
  OptimizerOptions o;
  EXPECT_NO_THROW(o.validate());
  EXPECT_EQ(o.resolved_components({2, 4}), 32u);
  o.restarts = 0;
  EXPECT_THROW(o.validate(), RangeError);
}

TEST(SchmidtEntropy, Examples) {
  ComplexVector prod(8);
  prod[0] = 1.0;
  EXPECT_NEAR(schmidt_entropy(prod, {2, 4}).nats, 0.0, 1e-14);
  EXPECT_NEAR(schmidt_entropy(prod, {4, 2}).nats, 0.0, 1e-14);
  EXPECT_NEAR(schmidt_entropy(ghz().span(), {2, 4}).nats, kLn2, 1e-14);
  const double w_oracle = -(1.0 / 3) * std::log(1.0 / 3) - (2.0 / 3) * std::log(2.0 / 3);
  EXPECT_NEAR(schmidt_entropy(w().span(), {2, 4}).nats, w_oracle, 1e-14);
  EXPECT_NEAR(w_oracle, 0.636514, 1e-6);
  EXPECT_THROW(schmidt_entropy(ComplexVector{1.0, 1.0, 0.0, 0.0}, {2, 2}), InvalidStateError);
}

TEST(Ree, GhzPairIsSeparable) {
  const auto r = ree(ghz().reduced(12), {2, 2}, RenyiParameter::traditional(1.0), quick());
  EXPECT_LE(r.value.nats, 1e-5);
  EXPECT_GE(r.value.nats, -1e-9);
}

TEST(Ree, GhzAcrossOneToTwoThree) {
  const auto r = ree(ghz().density(), {2, 4}, RenyiParameter::traditional(1.0), quick());
  EXPECT_NEAR(r.value.nats, kLn2, 1e-4);
  EXPECT_TRUE(r.converged);
}

TEST(Ree, WPairIsEntangled) {
  EXPECT_GT(ree(w_reduced(), {2, 2}, RenyiParameter::traditional(1.0), quick()).value.nats, 0.05);
}

TEST(Ree, ResultInvariants) {
  const auto p = RenyiParameter::sandwiched(2.0);
  const auto r = ree(w().density(), {2, 4}, p, quick(3, 9));
  EXPECT_EQ(r.restarts_used, 3);
  EXPECT_GT(r.iterations, 0);
  EXPECT_NEAR(r.value.nats, rel_entropy(w().density(), r.closest_state, p).nats, 1e-9);
  EXPECT_NEAR(r.closest_state.matrix().trace().real(), 1.0, 1e-12);
  EXPECT_GE(eig_hermitian(r.closest_state).eigenvalues.front(), -1e-12);
  bool seed_found = false;
  for (std::size_t k = 0; k < 3; ++k) seed_found |= r.best_restart_seed == mix_seed(9, k);
  EXPECT_TRUE(seed_found);
}

TEST(Ree, ErrorsPropagate) {
  EXPECT_THROW(ree(bell(), {2, 2}, RenyiParameter::traditional(2.5), quick()), RangeError);
  EXPECT_THROW(ree(bell(), {2, 2}, RenyiParameter::sandwiched(65.0), quick()), RangeError);
  EXPECT_THROW(ree(bell(), {2, 4}, RenyiParameter::traditional(1.0), quick()), DimensionError);
}

TEST(Ree, IterationExhaustionIsReportedNotThrown) {
  auto o = quick(1);
  o.max_iters = 1;
  const auto r = ree(w().density(), {2, 4}, RenyiParameter::traditional(1.0), o);
  EXPECT_FALSE(r.converged);
  EXPECT_TRUE(std::isfinite(r.value.nats));
}

TEST(Ree, PureStateOracle) {
  for (const auto& psi : {ghz(), w(), star()}) {
    const auto r = ree(psi.density(), {2, 4}, RenyiParameter::traditional(1.0), quick());
    EXPECT_NEAR(r.value.nats, schmidt_entropy(psi.span(), {2, 4}).nats, 5e-4);
  }
}

TEST(Ree, SeparableDetection) {
  std::mt19937_64 rng(77);
  const RenyiParameter params[] = {RenyiParameter::traditional(0.7), RenyiParameter::traditional(1.0),
                                   RenyiParameter::traditional(1.5), RenyiParameter::sandwiched(0.7),
                                   RenyiParameter::sandwiched(1.5),  RenyiParameter::sandwiched(3.0)};
  for (int i = 0; i < 50; ++i) {
    const Bipartition cut = i % 2 ? Bipartition{2, 4} : Bipartition{2, 2};
    const auto sigma = realize(random_ansatz(cut, 1 + rng() % 6, rng));
    const auto& p = params[i % 6];
    EXPECT_LE(ree(sigma, cut, p, quick(2, i)).value.nats, 1e-4) << i << " alpha " << p.alpha;
  }
}

TEST(Ree, MonotoneInRestarts) {
  const auto p = RenyiParameter::sandwiched(3.0);
  double prev = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 5; ++n) {
    const double v = ree(star().reduced(12), {2, 2}, p, quick(n, 11)).value.nats;
    EXPECT_LE(v, prev + 1e-12) << n;
    prev = v;
  }
}

TEST(Ree, LocalUnitaryInvariance) {
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto rho = random_density_matrix(8, 2, s);
    const auto u = kron(random_unitary(2, s + 10), random_unitary(4, s + 20));
    for (auto p : {RenyiParameter::traditional(1.0), RenyiParameter::sandwiched(2.0)}) {
      const double a = ree(rho, {2, 4}, p, quick(8, s)).value.nats;
      const double b = ree(conjugate(rho, u), {2, 4}, p, quick(8, s + 100)).value.nats;
      EXPECT_NEAR(a, b, 2e-4) << s << " " << p.alpha;
    }
  }
}

TEST(Ree, FiniteDifferenceModeAgreesWithAnalytic) {
  auto o = quick(2, 4);
  const auto p = RenyiParameter::traditional(0.7);
  const double analytic = ree(w().reduced(12), {2, 2}, p, o).value.nats;
  o.gradient = GradientMode::FiniteDifference;
  EXPECT_NEAR(ree(w().reduced(12), {2, 2}, p, o).value.nats, analytic, 1e-5);
}

TEST(Objective, AnalyticGradientMatchesFiniteDifferences) {
  // Full-rank ansatz (K = 32 on 8x8) keeps the objective smooth.
  std::mt19937_64 rng(3);
  for (auto p : {RenyiParameter::traditional(0.5), RenyiParameter::traditional(1.0), RenyiParameter::traditional(1.8),
                 RenyiParameter::sandwiched(0.8), RenyiParameter::sandwiched(4.0)}) {
    const DivergenceFunctional f(w().density(), p);
    const detail::AnsatzObjective obj(f, {2, 4}, 32);
    for (int trial = 0; trial < 3; ++trial) {
      const auto x = obj.pack(random_ansatz({2, 4}, 32, rng));
      std::vector<double> ga(x.size()), gf(x.size());
      const double va = obj.value_and_gradient(x, ga);
      const double vf = obj.value_and_fd_gradient(x, gf, 1e-5);
      EXPECT_NEAR(va, vf, 1e-12);
      double num = 0, den = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        num += (ga[i] - gf[i]) * (ga[i] - gf[i]);
        den += gf[i] * gf[i];
      }
      EXPECT_LE(std::sqrt(num / den), 1e-4) << p.alpha;
    }
  }
}

TEST(Objective, RichardsonRatioOfCentralDifferences) {
  // Error of a central difference scales as h^2, so e(h)/e(h/2) is close to 4;
  // the reference derivative is the analytic gradient.
  std::mt19937_64 rng(8);
  const DivergenceFunctional f(star().density(), RenyiParameter::traditional(1.3));
  const detail::AnsatzObjective obj(f, {2, 4}, 32);
  std::normal_distribution<double> normal;
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    const auto x = obj.pack(random_ansatz({2, 4}, 32, rng));
    std::vector<double> d(x.size()), g(x.size());
    double dn = 0;
    for (auto& e : d) {
      e = normal(rng);
      dn += e * e;
    }
    for (auto& e : d) e /= std::sqrt(dn);
    obj.value_and_gradient(x, g);
    double exact = 0;
    for (std::size_t k = 0; k < x.size(); ++k) exact += g[k] * d[k];
    auto central = [&](double h) {
      std::vector<double> xp(x), xm(x);
      for (std::size_t k = 0; k < x.size(); ++k) {
        xp[k] += h * d[k];
        xm[k] -= h * d[k];
      }
      return (obj.value(xp) - obj.value(xm)) / (2 * h);
    };
    const double h = 0.02;
    const double e1 = central(h) - exact, e2 = central(h / 2) - exact;
    if (std::abs(e2) < 1e-9) continue;  // curvature too small to resolve the ratio
    ++checked;
    EXPECT_GE(e1 / e2, 3.5) << i;
    EXPECT_LE(e1 / e2, 4.5) << i;
  }
  EXPECT_GE(checked, 15);
}

TEST(Sampler, DeterministicAndSeparable) {
  SeparableSampler a({2, 4}, 12), b({2, 4}, 12);
  for (int i = 0; i < 5; ++i) {
    const auto x = a.next(), y = b.next();
    EXPECT_EQ(x.matrix(), y.matrix());
    EXPECT_LE(ree(x, {2, 4}, RenyiParameter::traditional(1.0), quick(1, i)).value.nats, 1e-4);
  }
}

TEST(UpperBound, SingleSampleIsThatSample) {
  const auto p = RenyiParameter::sandwiched(2.0);
  SeparableSampler s({2, 2}, 42);
  EXPECT_EQ(sample_upper_bound(bell(), {2, 2}, p, 1, 42).nats, rel_entropy(bell(), s.next(), p).nats);
  EXPECT_THROW(sample_upper_bound(bell(), {2, 2}, p, 0, 42), RangeError);
}

// Random search only tightens slowly, so the check is ordering: the bound never
// undercuts ln 2, improves as samples accumulate under one seed, and beats the
// maximally mixed reference state.
TEST(UpperBound, BellPairBoundIsOrdered) {
  const auto p = RenyiParameter::traditional(1.0);
  const double coarse = sample_upper_bound(bell(), {2, 2}, p, 1000, 1).nats;
  const double fine = sample_upper_bound(bell(), {2, 2}, p, 20000, 1).nats;
  EXPECT_GE(fine, kLn2 - 1e-9);
  EXPECT_LE(fine, coarse);
  EXPECT_LT(fine, rel_entropy(bell(), DensityMatrix::maximally_mixed(4), p).nats);
}

TEST(UpperBound, SandwichesTheOptimizer) {
  std::mt19937_64 rng(15);
  const RenyiParameter params[] = {RenyiParameter::traditional(0.7), RenyiParameter::traditional(1.0),
                                   RenyiParameter::sandwiched(3.0)};
  for (int i = 0; i < 3; ++i) {
    const auto rho = i == 0 ? realize(random_ansatz({2, 2}, 3, rng)) : random_density_matrix(4, 1 + i, rng());
    const double e = ree(rho, {2, 2}, params[i], quick()).value.nats;
    EXPECT_LE(e, sample_upper_bound(rho, {2, 2}, params[i], 10000, 100 + i).nats + 1e-9);
  }
}

}  // namespace
}  // namespace renyient
