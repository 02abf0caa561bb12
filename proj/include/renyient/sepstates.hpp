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

// Relative entropy of entanglement: minimum Rényi divergence from a state to
// the set of separable states across a bipartition.
//
// The separable set is searched through a K-term mixture of product pure
// states, sigma = sum_k p_k |a_k><a_k| (x) |b_k><b_k|, with softmax weights and
// unnormalized vectors, so the search is unconstrained. Each restart runs a
// limited-memory BFGS descent with Armijo backtracking from a seeded random
// ansatz; the best restart wins.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "renyient/error.hpp"
#include "renyient/parallel.hpp"
#include "renyient/qmat.hpp"
#include "renyient/renyi.hpp"

namespace renyient {

struct SeparableAnsatz {
  Bipartition cut;
  std::vector<double> logits;
  std::vector<ComplexVector> vectors_a;
  std::vector<ComplexVector> vectors_b;

  std::size_t components() const noexcept { return logits.size(); }

  /// Softmax of the logits.
  std::vector<double> weights() const {
    std::vector<double> w(logits.size());
    if (w.empty()) return w;
    const double top = *std::max_element(logits.begin(), logits.end());
    double total = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) total += (w[k] = std::exp(logits[k] - top));
    for (auto& x : w) x /= total;
    return w;
  }
};

/// Random ansatz: standard-normal logits and complex Gaussian vectors.
inline SeparableAnsatz random_ansatz(Bipartition cut, std::size_t components, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  SeparableAnsatz a{cut, {}, {}, {}};
  for (std::size_t k = 0; k < components; ++k) {
    a.logits.push_back(normal(rng));
    a.vectors_a.push_back(random_pure_vector(cut.dim_a, rng));
    a.vectors_b.push_back(random_pure_vector(cut.dim_b, rng));
  }
  return a;
}

/// sum_k p_k |a_k><a_k| (x) |b_k><b_k| with normalized vectors and softmax weights.
inline DensityMatrix realize(const SeparableAnsatz& ansatz) {
  const std::size_t k_count = ansatz.components();
  if (k_count == 0) throw InvalidStateError("realize: ansatz has no components");
  if (ansatz.vectors_a.size() != k_count || ansatz.vectors_b.size() != k_count)
    throw DimensionError("realize: component counts differ");
  const std::size_t d = ansatz.cut.dim();
  const auto w = ansatz.weights();
  ComplexMatrix sigma(d, d);
  for (std::size_t k = 0; k < k_count; ++k) {
    const auto& a = ansatz.vectors_a[k];
    const auto& b = ansatz.vectors_b[k];
    if (a.size() != ansatz.cut.dim_a || b.size() != ansatz.cut.dim_b)
      throw DimensionError("realize: vector length does not match the bipartition");
    const double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0) throw InvalidStateError("realize: zero vector in component " + std::to_string(k));
    ComplexVector v = kron(std::span<const Complex>(a), std::span<const Complex>(b));
    for (auto& z : v) z /= na * nb;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sigma(i, j) += w[k] * v[i] * std::conj(v[j]);
  }
  return DensityMatrix(hermitian_part(sigma));
}

enum class GradientMode { Analytic, FiniteDifference };

struct OptimizerOptions {
  int restarts = 16;
  int max_iters = 2000;
  double grad_step = 1e-5;      // central finite-difference step
  double tol_objective = 1e-7;  // improvement over the last 10 iterations
  std::uint64_t seed = 0;
  double floor = kDefaultFloor;
  int components = 0;  // 0 selects 4 * dim_a * dim_b
  GradientMode gradient = GradientMode::Analytic;
  int workers = 1;  // threads used for independent restarts

  void validate() const {
    if (restarts < 1) throw RangeError("optimizer: restarts must be >= 1");
    if (max_iters < 1) throw RangeError("optimizer: max_iters must be >= 1");
    if (!(grad_step > 0.0)) throw RangeError("optimizer: grad_step must be positive");
    if (!(tol_objective > 0.0)) throw RangeError("optimizer: tol_objective must be positive");
    if (!(floor > 0.0)) throw RangeError("optimizer: floor must be positive");
    if (components < 0) throw RangeError("optimizer: components must be positive (0 = default)");
    if (workers < 1) throw RangeError("optimizer: workers must be >= 1");
  }

  std::size_t resolved_components(const Bipartition& cut) const {
    return components > 0 ? static_cast<std::size_t>(components) : 4 * cut.dim_a * cut.dim_b;
  }
};

/// Iterations between which the objective improvement is measured for convergence.
inline constexpr int kConvergenceWindow = 10;

struct REEResult {
  EntropyValue value;
  DensityMatrix closest_state;
  bool converged = false;
  int restarts_used = 0;
  std::uint64_t best_restart_seed = 0;
  int iterations = 0;
};

namespace detail {

/// Objective over the flat parameter vector of a fixed-size ansatz.
/// Per component: [logit, Re a (dA), Im a (dA), Re b (dB), Im b (dB)].
class AnsatzObjective {
 public:
  AnsatzObjective(const DivergenceFunctional& divergence, Bipartition cut, std::size_t components)
      : div_(divergence), cut_(cut), k_(components), da_(cut.dim_a), db_(cut.dim_b), d_(cut.dim()) {}

  std::size_t block() const noexcept { return 1 + 2 * da_ + 2 * db_; }
  std::size_t size() const noexcept { return k_ * block(); }

  std::vector<double> pack(const SeparableAnsatz& a) const {
    std::vector<double> x(size());
    for (std::size_t k = 0; k < k_; ++k) {
      double* p = x.data() + k * block();
      p[0] = a.logits[k];
      for (std::size_t i = 0; i < da_; ++i) {
        p[1 + i] = a.vectors_a[k][i].real();
        p[1 + da_ + i] = a.vectors_a[k][i].imag();
      }
      for (std::size_t i = 0; i < db_; ++i) {
        p[1 + 2 * da_ + i] = a.vectors_b[k][i].real();
        p[1 + 2 * da_ + db_ + i] = a.vectors_b[k][i].imag();
      }
    }
    return x;
  }

  SeparableAnsatz unpack(std::span<const double> x) const {
    SeparableAnsatz a{cut_, {}, {}, {}};
    for (std::size_t k = 0; k < k_; ++k) {
      const double* p = x.data() + k * block();
      a.logits.push_back(p[0]);
      ComplexVector va(da_), vb(db_);
      for (std::size_t i = 0; i < da_; ++i) va[i] = Complex(p[1 + i], p[1 + da_ + i]);
      for (std::size_t i = 0; i < db_; ++i) vb[i] = Complex(p[1 + 2 * da_ + i], p[1 + 2 * da_ + db_ + i]);
      a.vectors_a.push_back(std::move(va));
      a.vectors_b.push_back(std::move(vb));
    }
    return a;
  }

  double value(std::span<const double> x) const {
    Workspace ws;
    build(x, ws);
    return div_.evaluate(ws.sigma, nullptr);
  }

  /// Value and analytic gradient (written into g).
  double value_and_gradient(std::span<const double> x, std::span<double> g) const {
    Workspace ws;
    build(x, ws);
    ComplexMatrix grad;
    const double f = div_.evaluate(ws.sigma, &grad);
    if (!std::isfinite(f)) return f;

    double mean_g = 0.0;
    for (std::size_t k = 0; k < k_; ++k) {
      ws.gk[k] = quadratic(grad, ws.product[k]);
      mean_g += ws.p[k] * ws.gk[k];
    }
    for (std::size_t k = 0; k < k_; ++k) {
      double* out = g.data() + k * block();
      out[0] = ws.p[k] * (ws.gk[k] - mean_g);
      const auto& ahat = ws.ahat[k];
      const auto& bhat = ws.bhat[k];
      // H_a(i,j) = sum_mn conj(b_m) G(im, jn) b_n ; H_b(m,n) = sum_ij conj(a_i) G(im, jn) a_j
      ComplexVector ha_a(da_, 0.0), hb_b(db_, 0.0);
      for (std::size_t i = 0; i < da_; ++i)
        for (std::size_t m = 0; m < db_; ++m) {
          const std::size_t row = i * db_ + m;
          Complex acc_a = 0.0;
          for (std::size_t j = 0; j < da_; ++j)
            for (std::size_t n = 0; n < db_; ++n) {
              const Complex gv = grad(row, j * db_ + n);
              acc_a += gv * ahat[j] * bhat[n];
            }
          // acc_a = (G v)_(i,m)
          ha_a[i] += std::conj(bhat[m]) * acc_a;
          hb_b[m] += std::conj(ahat[i]) * acc_a;
        }
      const double scale = 2.0 * ws.p[k];
      for (std::size_t i = 0; i < da_; ++i) {
        const Complex r = (ha_a[i] - ws.gk[k] * ahat[i]) * (scale / ws.norm_a[k]);
        out[1 + i] = r.real();
        out[1 + da_ + i] = r.imag();
      }
      for (std::size_t m = 0; m < db_; ++m) {
        const Complex r = (hb_b[m] - ws.gk[k] * bhat[m]) * (scale / ws.norm_b[k]);
        out[1 + 2 * da_ + m] = r.real();
        out[1 + 2 * da_ + db_ + m] = r.imag();
      }
    }
    return f;
  }

  /// Central finite differences with step h.
  double value_and_fd_gradient(std::span<const double> x, std::span<double> g, double h) const {
    std::vector<double> probe(x.begin(), x.end());
    for (std::size_t i = 0; i < probe.size(); ++i) {
      const double orig = probe[i];
      probe[i] = orig + h;
      const double fp = value(probe);
      probe[i] = orig - h;
      const double fm = value(probe);
      probe[i] = orig;
      g[i] = (fp - fm) / (2.0 * h);
    }
    return value(x);
  }

  /// Rescales vectors to unit norm when their norms drift outside [0.1, 10]; returns true if anything changed.
  bool renormalize(std::span<double> x) const {
    bool changed = false;
    for (std::size_t k = 0; k < k_; ++k) {
      double* p = x.data() + k * block();
      changed |= renormalize_segment(p + 1, 2 * da_);
      changed |= renormalize_segment(p + 1 + 2 * da_, 2 * db_);
    }
    return changed;
  }

 private:
  struct Workspace {
    ComplexMatrix sigma;
    std::vector<double> p, gk, norm_a, norm_b;
    std::vector<ComplexVector> ahat, bhat, product;
  };

  static bool renormalize_segment(double* s, std::size_t n) {
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += s[i] * s[i];
    nrm = std::sqrt(nrm);
    if (nrm >= 0.1 && nrm <= 10.0) return false;
    if (nrm == 0.0) return false;
    for (std::size_t i = 0; i < n; ++i) s[i] /= nrm;
    return true;
  }

  static double quadratic(const ComplexMatrix& g, const ComplexVector& v) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      Complex row = 0.0;
      for (std::size_t j = 0; j < v.size(); ++j) row += g(i, j) * v[j];
      acc += std::conj(v[i]) * row;
    }
    return acc.real();
  }

  void build(std::span<const double> x, Workspace& ws) const {
    ws.sigma = ComplexMatrix(d_, d_);
    ws.p.assign(k_, 0.0);
    ws.gk.assign(k_, 0.0);
    ws.norm_a.assign(k_, 1.0);
    ws.norm_b.assign(k_, 1.0);
    ws.ahat.assign(k_, ComplexVector(da_));
    ws.bhat.assign(k_, ComplexVector(db_));
    ws.product.assign(k_, ComplexVector(d_));

    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < k_; ++k) top = std::max(top, x[k * block()]);
    double total = 0.0;
    for (std::size_t k = 0; k < k_; ++k) total += (ws.p[k] = std::exp(x[k * block()] - top));
    for (auto& w : ws.p) w /= total;

    for (std::size_t k = 0; k < k_; ++k) {
      const double* p = x.data() + k * block();
      double na = 0.0, nb = 0.0;
      for (std::size_t i = 0; i < da_; ++i) {
        ws.ahat[k][i] = Complex(p[1 + i], p[1 + da_ + i]);
        na += std::norm(ws.ahat[k][i]);
      }
      for (std::size_t i = 0; i < db_; ++i) {
        ws.bhat[k][i] = Complex(p[1 + 2 * da_ + i], p[1 + 2 * da_ + db_ + i]);
        nb += std::norm(ws.bhat[k][i]);
      }
      na = std::max(std::sqrt(na), 1e-150);
      nb = std::max(std::sqrt(nb), 1e-150);
      ws.norm_a[k] = na;
      ws.norm_b[k] = nb;
      for (auto& z : ws.ahat[k]) z /= na;
      for (auto& z : ws.bhat[k]) z /= nb;
      auto& v = ws.product[k];
      for (std::size_t i = 0; i < da_; ++i)
        for (std::size_t m = 0; m < db_; ++m) v[i * db_ + m] = ws.ahat[k][i] * ws.bhat[k][m];
      const double w = ws.p[k];
      for (std::size_t i = 0; i < d_; ++i) {
        const Complex wi = w * v[i];
        for (std::size_t j = i; j < d_; ++j) ws.sigma(i, j) += wi * std::conj(v[j]);
      }
    }
    for (std::size_t i = 0; i < d_; ++i) {
      ws.sigma(i, i) = ws.sigma(i, i).real();
      for (std::size_t j = i + 1; j < d_; ++j) ws.sigma(j, i) = std::conj(ws.sigma(i, j));
    }
  }

  const DivergenceFunctional& div_;
  Bipartition cut_;
  std::size_t k_, da_, db_, d_;
};

struct LocalMinimum {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> x;
  bool converged = false;
  int iterations = 0;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// L-BFGS (memory 8) with Armijo backtracking. Converged when the objective
/// improves by less than tol_objective over kConvergenceWindow iterations, or
/// when no descent step can be found from the steepest-descent direction.
inline LocalMinimum minimize(const AnsatzObjective& obj, std::vector<double> x, const OptimizerOptions& opts) {
  constexpr std::size_t kMemory = 8;
  const std::size_t n = x.size();
  auto eval = [&](std::span<const double> at, std::span<double> g) {
    return opts.gradient == GradientMode::Analytic ? obj.value_and_gradient(at, g)
                                                   : obj.value_and_fd_gradient(at, g, opts.grad_step);
  };

  LocalMinimum out;
  std::vector<double> g(n), d(n), x_new(n), g_new(n);
  double f = eval(x, g);
  if (!std::isfinite(f)) {
    out.x = std::move(x);
    return out;
  }
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;
  std::vector<double> history{f};
  std::vector<double> alpha_buf(kMemory);

  int it = 0;
  for (; it < opts.max_iters; ++it) {
    // Two-loop recursion: d = -H g.
    for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
    const std::size_t m = s_hist.size();
    for (std::size_t j = m; j-- > 0;) {
      alpha_buf[j] = rho_hist[j] * dot(s_hist[j], d);
      for (std::size_t i = 0; i < n; ++i) d[i] -= alpha_buf[j] * y_hist[j][i];
    }
    double step0 = 1.0;
    if (m > 0) {
      const double gamma = dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
      for (auto& di : d) di *= gamma;
    } else {
      const double gnorm = std::sqrt(dot(g, g));
      step0 = std::min(1.0, 0.1 / std::max(gnorm, 1e-300));
    }
    for (std::size_t j = 0; j < m; ++j) {
      const double beta = rho_hist[j] * dot(y_hist[j], d);
      for (std::size_t i = 0; i < n; ++i) d[i] += (alpha_buf[j] - beta) * s_hist[j][i];
    }
    double slope = dot(g, d);
    if (!(slope < 0.0)) {
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
      slope = -dot(g, g);
      step0 = std::min(1.0, 0.1 / std::max(std::sqrt(-slope), 1e-300));
    }
    if (slope > -1e-300) {
      out.converged = true;
      break;
    }

    double t = step0;
    double f_new = f;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      for (std::size_t i = 0; i < n; ++i) x_new[i] = x[i] + t * d[i];
      f_new = eval(x_new, g_new);
      if (std::isfinite(f_new) && f_new <= f + 1e-4 * t * slope) {
        accepted = true;
        break;
      }
      t *= std::isfinite(f_new) ? 0.5 : 0.1;
    }
    if (!accepted) {
      if (!s_hist.empty()) {
        s_hist.clear();
        y_hist.clear();
        rho_hist.clear();
        continue;
      }
      out.converged = true;
      break;
    }

    std::vector<double> s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = x_new[i] - x[i];
      y[i] = g_new[i] - g[i];
    }
    x.swap(x_new);
    g.swap(g_new);
    f = f_new;
    if (obj.renormalize(x)) {
      f = eval(x, g);
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
    } else {
      const double sy = dot(s, y);
      if (sy > 1e-14 * std::sqrt(dot(s, s) * dot(y, y))) {
        if (s_hist.size() == kMemory) {
          s_hist.pop_front();
          y_hist.pop_front();
          rho_hist.pop_front();
        }
        s_hist.push_back(std::move(s));
        y_hist.push_back(std::move(y));
        rho_hist.push_back(1.0 / sy);
      }
    }
    history.push_back(f);
    if (history.size() > static_cast<std::size_t>(kConvergenceWindow) &&
        history[history.size() - 1 - kConvergenceWindow] - f < opts.tol_objective) {
      out.converged = true;
      ++it;
      break;
    }
  }
  out.value = f;
  out.x = std::move(x);
  out.iterations = it;
  return out;
}

}  // namespace detail

/// Relative entropy of entanglement of `rho` across `cut`:
/// the best of opts.restarts independent local minimizations of
/// rel_entropy(rho, sigma, p) over separable sigma.
/// Restart r uses seed mix_seed(opts.seed, r), so a run with more restarts
/// extends (never changes) the restarts of a shorter run.
inline REEResult ree(const DensityMatrix& rho, Bipartition cut, RenyiParameter p, const OptimizerOptions& opts = {}) {
  cut.require_matches(rho.dim());
  p.validate();
  if (p.variant == Variant::Sandwiched && p.alpha > kMaxSandwichedAlpha)
    throw RangeError("ree: sandwiched alpha above " + std::to_string(kMaxSandwichedAlpha) + " is not supported");
  opts.validate();

  const std::size_t k = opts.resolved_components(cut);
  const DivergenceFunctional divergence(rho, p, opts.floor);
  const detail::AnsatzObjective objective(divergence, cut, k);

  std::vector<detail::LocalMinimum> runs(static_cast<std::size_t>(opts.restarts));
  parallel_for(runs.size(), opts.workers, [&](std::size_t r) {
    std::mt19937_64 rng(mix_seed(opts.seed, r));
    runs[r] = detail::minimize(objective, objective.pack(random_ansatz(cut, k, rng)), opts);
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r].value < runs[best].value) best = r;
  if (!std::isfinite(runs[best].value)) throw Error("ree: every restart started at an infinite divergence");

  DensityMatrix closest = realize(objective.unpack(runs[best].x));
  const EntropyValue value = rel_entropy(rho, closest, p, opts.floor);
  return REEResult{value, std::move(closest), runs[best].converged, opts.restarts, mix_seed(opts.seed, best),
                   runs[best].iterations};
}

/// Von Neumann entropy of Tr_B |psi><psi|; for pure states this is the alpha = 1 REE.
inline EntropyValue schmidt_entropy(std::span<const Complex> psi, Bipartition cut) {
  cut.require_matches(psi.size());
  if (std::abs(norm(psi) - 1.0) > 1e-10) throw InvalidStateError("schmidt_entropy: state is not normalized");
  ComplexMatrix reduced(cut.dim_a, cut.dim_a);
  for (std::size_t i = 0; i < cut.dim_a; ++i)
    for (std::size_t j = 0; j < cut.dim_a; ++j)
      for (std::size_t m = 0; m < cut.dim_b; ++m)
        reduced(i, j) += psi[i * cut.dim_b + m] * std::conj(psi[j * cut.dim_b + m]);
  double s = 0.0;
  for (double x : detail::jacobi_eigen(hermitian_part(reduced)).eigenvalues)
    if (x > kZeroEigenvalue) s -= x * std::log(x);
  return {s};
}

/// Seeded stream of random separable states: K uniform in [1, dim_a*dim_b],
/// flat-Dirichlet weights, Haar-random product vectors.
class SeparableSampler {
 public:
  SeparableSampler(Bipartition cut, std::uint64_t seed) : cut_(cut), rng_(seed) {}

  DensityMatrix next() {
    std::uniform_int_distribution<std::size_t> count(1, cut_.dim());
    std::exponential_distribution<double> expo(1.0);
    const std::size_t k = count(rng_);
    SeparableAnsatz a{cut_, {}, {}, {}};
    for (std::size_t i = 0; i < k; ++i) {
      a.logits.push_back(std::log(std::max(expo(rng_), 1e-300)));
      a.vectors_a.push_back(random_pure_vector(cut_.dim_a, rng_));
      a.vectors_b.push_back(random_pure_vector(cut_.dim_b, rng_));
    }
    return realize(a);
  }

 private:
  Bipartition cut_;
  std::mt19937_64 rng_;
};

/// Minimum divergence over n_samples random separable states: an upper bound on the REE.
inline EntropyValue sample_upper_bound(const DensityMatrix& rho, Bipartition cut, RenyiParameter p,
                                       std::size_t n_samples, std::uint64_t seed, double floor = kDefaultFloor) {
  cut.require_matches(rho.dim());
  p.validate();
  if (n_samples < 1) throw RangeError("sample_upper_bound: n_samples must be >= 1");
  SeparableSampler sampler(cut, seed);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_samples; ++i) best = std::min(best, rel_entropy(rho, sampler.next(), p, floor).nats);
  return {best};
}

}  // namespace renyient
