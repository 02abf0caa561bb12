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

// Command-line front end. Exit codes: 0 success, 1 configuration or usage
// error, 2 numeric failure, 3 I/O error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "renyient/renyient.hpp"

namespace {

using namespace renyient;
using nlohmann::json;

enum ExitCode { kOk = 0, kConfig = 1, kNumeric = 2, kIo = 3 };

struct NumericFailure : Error {
  using Error::Error;
};

struct ModelFlags {
  std::string model;
  std::optional<double> jx, jy, jz, j, delta, gamma, lambda;
  double temp = 1.0;

  void attach(CLI::App* app) {
    app->add_option("--model", model, "XYZ, XXZ, XY or TFI");
    app->add_option("--jx", jx);
    app->add_option("--jy", jy);
    app->add_option("--jz", jz);
    app->add_option("--j", j);
    app->add_option("--delta", delta);
    app->add_option("--gamma", gamma);
    app->add_option("--lambda", lambda);
    app->add_option("--temp", temp, "temperature (k_B = 1)");
  }

  ModelParams params() const {
    const auto m = parse_model(model);
    if (!m) throw ConfigError("unknown or missing --model '" + model + "'", 0, "model");
    ModelParams p;
    p.model = *m;
    const std::pair<const char*, const std::optional<double>*> all[] = {
        {"jx", &jx}, {"jy", &jy}, {"jz", &jz}, {"j", &j}, {"delta", &delta}, {"gamma", &gamma}, {"lambda", &lambda}};
    for (const auto& [name, value] : all) {
      if (!value->has_value()) continue;
      if (!p.uses(name))
        throw ConfigError(std::string("--") + name + " does not apply to model " + std::string(to_string(*m)), 0,
                          name);
      p.set(name, **value);
    }
    try {
      p.validate();
    } catch (const RangeError& e) {
      throw ConfigError(e.what(), 0, "model");
    }
    return p;
  }
};

struct RenyiFlags {
  double alpha = 1.0;
  std::string variant = "trad";
  int restarts = 16;
  std::uint64_t seed = 0;
  int workers = 1;
  int max_iters = 2000;

  void attach(CLI::App* app) {
    app->add_option("--alpha", alpha, "Renyi parameter");
    app->add_option("--variant", variant, "trad or sand")->check(CLI::IsMember({"trad", "sand"}));
    app->add_option("--restarts", restarts);
    app->add_option("--seed", seed);
    app->add_option("--workers", workers);
    app->add_option("--max-iters", max_iters);
  }

  RenyiParameter parameter() const {
    RenyiParameter p{alpha, *parse_variant(variant)};
    if (!p.admissible() || (p.variant == Variant::Sandwiched && p.alpha > kMaxSandwichedAlpha))
      throw ConfigError("alpha " + format9(alpha) + " is outside the " + variant + " range", 0, "alpha");
    return p;
  }

  OptimizerOptions options() const {
    OptimizerOptions o;
    o.restarts = restarts;
    o.seed = seed;
    o.workers = workers;
    o.max_iters = max_iters;
    try {
      o.validate();
    } catch (const RangeError& e) {
      throw ConfigError(e.what());
    }
    return o;
  }
};

std::optional<PureState3> named_state(const std::string& name, double phi) {
  if (name == "ghz") return ghz();
  if (name == "w") return w();
  if (name == "star") return star();
  if (name == "wbar") return wbar();
  if (name == "tfi") return tfi_ground(phi);
  return std::nullopt;
}

/// Either a named pure state or a thermal state built from the model flags.
DensityMatrix resolve_state(const std::string& state, double phi, const ModelFlags& mf) {
  if (!state.empty()) {
    const auto s = named_state(state, phi);
    if (!s) throw ConfigError("unknown state '" + state + "'", 0, "state");
    return s->density();
  }
  if (mf.model.empty()) throw ConfigError("give either --state or --model", 0, "state");
  if (!(mf.temp > 0.0)) throw ConfigError("--temp must be positive", 0, "temp");
  return thermal_state(mf.params(), mf.temp).rho;
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(row);
  }
  return rows;
}

void print_matrix_csv(std::ostream& os, const ComplexMatrix& m) {
  os << "row,col,re,im\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      os << i << ',' << k << ',' << format9(m(i, k).real()) << ',' << format9(m(i, k).imag()) << '\n';
}

json row_json(const SweepRow& r) {
  return {{"model", r.model},       {"param_name", r.param_name},
          {"param_value", r.param_value}, {"temp", r.temp},
          {"alpha", r.alpha},       {"variant", std::string(to_string(r.variant))},
          {"e_1_23", r.e_1_23},     {"e_1_2", r.e_1_2},
          {"e_1_3", r.e_1_3},       {"m", r.m},
          {"converged", r.converged}, {"restarts_used", r.restarts_used},
          {"seed", r.seed},         {"walltime_ms", r.walltime_ms}};
}

/// JSON has no infinity; emit it as the string "inf".
json number_json(double v) { return std::isfinite(v) ? json(v) : json(format9(v)); }

// ---------------------------------------------------------------------------
// check: analytic-vs-numeric and inequality self-tests

struct CheckLine {
  std::string name;
  bool pass;
  double worst;
  double tolerance;
};

std::vector<CheckLine> run_checks(int samples, std::uint64_t seed) {
  std::vector<CheckLine> out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coupling(-1.5, 1.5), temp(0.3, 3.0), lam(-2.0, 2.0), unit(0.0, 1.0);
  double z_xyz = 0, z_xxz = 0, z_tfi = 0, m_xyz = 0, m_tfi = 0;
  for (int i = 0; i < samples; ++i) {
    const double t = temp(rng);
    const auto pxyz = ModelParams::xyz(coupling(rng), coupling(rng), coupling(rng));
    const auto num_xyz = thermal_state(pxyz, t);
    const auto [rho_xyz, a_xyz] = xyz_analytic(pxyz, t);
    z_xyz = std::max(z_xyz, std::abs(a_xyz.partition_function / num_xyz.partition_function() - 1.0));
    m_xyz = std::max(m_xyz, max_abs_diff(rho_xyz.matrix(), num_xyz.rho.matrix()));

    const auto pxxz = ModelParams::xxz(coupling(rng), -0.9 + 3.0 * unit(rng));
    z_xxz = std::max(z_xxz, std::abs(xxz_partition_function(pxxz, t) / thermal_state(pxxz, t).partition_function() - 1));

    const auto ptfi = ModelParams::tfi(lam(rng));
    const auto num_tfi = thermal_state(ptfi, t);
    const auto [rho_tfi, a_tfi] = tfi_analytic(ptfi, t);
    z_tfi = std::max(z_tfi, std::abs(a_tfi.partition_function / num_tfi.partition_function() - 1.0));
    m_tfi = std::max(m_tfi, max_abs_diff(rho_tfi.matrix(), num_tfi.rho.matrix()));
  }
  out.push_back({"partition function XYZ", z_xyz <= 1e-10, z_xyz, 1e-10});
  out.push_back({"partition function XXZ", z_xxz <= 1e-10, z_xxz, 1e-10});
  out.push_back({"partition function TFI", z_tfi <= 1e-10, z_tfi, 1e-10});
  out.push_back({"thermal matrix XYZ", m_xyz <= 1e-8, m_xyz, 1e-8});
  out.push_back({"thermal matrix TFI", m_tfi <= 1e-8, m_tfi, 1e-8});

  double alt = 0.0;
  const std::size_t dims[] = {2, 4, 8};
  const double alphas[] = {0.6, 0.8, 1.5, 2.0};
  for (int i = 0; i < samples; ++i) {
    const std::size_t d = dims[i % 3];
    const auto rho = random_density_matrix(d, 1 + rng() % d, rng());
    const auto sigma = random_density_matrix(d, d, rng());
    for (double a : alphas)
      alt = std::min(alt, trad_rel_entropy(rho, sigma, a).nats - sand_rel_entropy(rho, sigma, a).nats);
  }
  out.push_back({"traditional >= sandwiched", alt >= -1e-9, -alt, 1e-9});
  return out;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Renyi relative entropy of entanglement and monogamy for three-qubit states"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "csv";
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // state
  auto* state_cmd = app.add_subcommand("state", "print a canonical state or its two-qubit reduction");
  std::string state_name = "ghz";
  double phi = 0.0;
  int reduced = 0;
  state_cmd->add_option("name", state_name, "ghz, w, star, wbar or tfi")->required();
  state_cmd->add_option("--phi", phi, "angle of the tfi state");
  state_cmd->add_option("--reduced", reduced, "12 or 13 for a two-qubit reduction");

  // ree
  auto* ree_cmd = app.add_subcommand("ree", "relative entropy of entanglement across one cut");
  std::string ree_state, cut = "1:23";
  ModelFlags ree_model;
  RenyiFlags ree_renyi;
  ree_cmd->add_option("--state", ree_state, "named pure state (ghz, w, star, wbar, tfi)");
  ree_cmd->add_option("--phi", phi);
  ree_cmd->add_option("--cut", cut, "1:23, 1:2 or 1:3")->check(CLI::IsMember({"1:23", "1:2", "1:3"}));
  ree_model.attach(ree_cmd);
  ree_renyi.attach(ree_cmd);

  // monogamy
  auto* mono_cmd = app.add_subcommand("monogamy", "M = E(1:23) - E(1:2) - E(1:3)");
  std::string mono_state;
  ModelFlags mono_model;
  RenyiFlags mono_renyi;
  mono_cmd->add_option("--state", mono_state);
  mono_cmd->add_option("--phi", phi);
  mono_model.attach(mono_cmd);
  mono_renyi.attach(mono_cmd);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "run a sweep configuration file");
  std::string config_path, out_override, cache_override;
  int sweep_workers = 0;
  sweep_cmd->add_option("config", config_path)->required();
  sweep_cmd->add_option("--out", out_override, "CSV output path (overrides the config)");
  sweep_cmd->add_option("--cache-dir", cache_override, "cache directory (overrides the config)");
  sweep_cmd->add_option("--workers", sweep_workers, "parallel grid jobs (overrides the config)");

  // tc
  auto* tc_cmd = app.add_subcommand("tc", "critical temperature of E(1:23)");
  ModelFlags tc_model;
  RenyiFlags tc_renyi;
  CriticalTemperatureOptions ct;
  tc_model.attach(tc_cmd);
  tc_renyi.attach(tc_cmd);
  tc_cmd->add_option("--t-min", ct.t_min);
  tc_cmd->add_option("--t-max", ct.t_max);
  tc_cmd->add_option("--resolution", ct.resolution);
  tc_cmd->add_option("--threshold", ct.threshold);

  // check
  auto* check_cmd = app.add_subcommand("check", "analytic-vs-numeric and divergence-ordering self-tests");
  int samples = 50;
  std::uint64_t check_seed = 7;
  check_cmd->add_option("--samples", samples);
  check_cmd->add_option("--seed", check_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }
  const bool as_json = format == "json";

  if (*state_cmd) {
    const auto s = named_state(state_name, phi);
    if (!s) throw ConfigError("unknown state '" + state_name + "'", 0, "name");
    if (reduced != 0 && reduced != 12 && reduced != 13) throw ConfigError("--reduced must be 12 or 13", 0, "reduced");
    if (reduced != 0) {
      const auto rho = s->reduced(reduced);
      if (as_json) {
        std::cout << json{{"state", state_name}, {"reduced", reduced}, {"matrix", matrix_json(rho.matrix())}}.dump(2)
                  << '\n';
      } else {
        print_matrix_csv(std::cout, rho.matrix());
      }
      return kOk;
    }
    if (as_json) {
      json amps = json::array();
      for (auto z : s->amplitudes()) amps.push_back({z.real(), z.imag()});
      std::cout << json{{"state", state_name}, {"amplitudes", amps}}.dump(2) << '\n';
    } else {
      std::cout << "index,basis,re,im\n";
      for (std::size_t i = 0; i < 8; ++i) {
        const auto z = (*s)[i];
        std::cout << i << ',' << ((i >> 2) & 1) << ((i >> 1) & 1) << (i & 1) << ',' << format9(z.real()) << ','
                  << format9(z.imag()) << '\n';
      }
    }
    return kOk;
  }

  if (*ree_cmd) {
    const DensityMatrix rho3 = resolve_state(ree_state, phi, ree_model);
    const auto p = ree_renyi.parameter();
    const auto opts = ree_renyi.options();
    REEResult r = cut == "1:23"  ? ree(rho3, {2, 4}, p, opts)
                  : cut == "1:2" ? ree(partial_trace(rho3, {2, 2, 2}, {0, 1}), {2, 2}, p, opts)
                                 : ree(partial_trace(rho3, {2, 2, 2}, {0, 2}), {2, 2}, p, opts);
    if (as_json) {
      std::cout << json{{"cut", cut},
                        {"alpha", p.alpha},
                        {"variant", std::string(to_string(p.variant))},
                        {"value", number_json(r.value.nats)},
                        {"converged", r.converged},
                        {"restarts_used", r.restarts_used},
                        {"best_restart_seed", r.best_restart_seed},
                        {"iterations", r.iterations}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "cut,alpha,variant,value,converged,restarts_used,best_restart_seed,iterations\n"
                << cut << ',' << format9(p.alpha) << ',' << to_string(p.variant) << ',' << format9(r.value.nats)
                << ',' << (r.converged ? 1 : 0) << ',' << r.restarts_used << ',' << r.best_restart_seed << ','
                << r.iterations << '\n';
    }
    if (!r.converged) std::cerr << "warning: optimizer did not converge\n";
    return kOk;
  }

  if (*mono_cmd) {
    const DensityMatrix rho3 = resolve_state(mono_state, phi, mono_model);
    const auto p = mono_renyi.parameter();
    const auto r = monogamy(rho3, p, mono_renyi.options());
    if (as_json) {
      std::cout << json{{"alpha", p.alpha},
                        {"variant", std::string(to_string(p.variant))},
                        {"e_1_23", number_json(r.e_1_23().nats)},
                        {"e_1_2", number_json(r.e_1_2().nats)},
                        {"e_1_3", number_json(r.e_1_3().nats)},
                        {"m", number_json(r.m)},
                        {"converged", r.converged()}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "alpha,variant,e_1_23,e_1_2,e_1_3,m,converged\n"
                << format9(p.alpha) << ',' << to_string(p.variant) << ',' << format9(r.e_1_23().nats) << ','
                << format9(r.e_1_2().nats) << ',' << format9(r.e_1_3().nats) << ',' << format9(r.m) << ','
                << (r.converged() ? 1 : 0) << '\n';
    }
    return kOk;
  }

  if (*sweep_cmd) {
    SweepConfig c = load_sweep_config(config_path);
    if (!out_override.empty()) c.out = out_override;
    if (!cache_override.empty()) c.cache_dir = cache_override;
    if (sweep_workers > 0) c.workers = sweep_workers;
    if (!c.out.empty()) require_writable(c.out);
    std::optional<RowCache> cache;
    if (!c.cache_dir.empty()) cache.emplace(c.cache_dir);
    const SweepResult result = run_sweep(c, cache ? &*cache : nullptr);
    if (!c.out.empty()) save_csv(c.out, result.rows);
    if (as_json) {
      json rows = json::array();
      for (const auto& r : result.rows) rows.push_back(row_json(r));
      std::cout << json{{"rows", rows},
                        {"computed", result.stats.computed},
                        {"cache_hits", result.stats.cache_hits},
                        {"unconverged", result.stats.unconverged}}
                       .dump(2)
                << '\n';
    } else if (c.out.empty()) {
      write_csv(std::cout, result.rows);
    }
    std::cerr << "rows " << result.stats.rows << ", computed " << result.stats.computed << ", cache hits "
              << result.stats.cache_hits << ", unconverged " << result.stats.unconverged << '\n';
    if (result.stats.unconverged_fraction() > c.max_unconverged_fraction)
      throw NumericFailure("unconverged fraction " + format9(result.stats.unconverged_fraction()) +
                           " exceeds max_unconverged_fraction " + format9(c.max_unconverged_fraction));
    return kOk;
  }

  if (*tc_cmd) {
    const auto params = tc_model.params();
    const auto p = tc_renyi.parameter();
    std::optional<double> tc;
    try {
      tc = critical_temperature(params, p, tc_renyi.options(), ct);
    } catch (const RangeError& e) {
      throw ConfigError(e.what());
    }
    if (as_json) {
      std::cout << json{{"alpha", p.alpha},
                        {"variant", std::string(to_string(p.variant))},
                        {"t_c", tc ? json(*tc) : json("none-in-range")}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "alpha,variant,t_c\n"
                << format9(p.alpha) << ',' << to_string(p.variant) << ',' << (tc ? format9(*tc) : "none-in-range")
                << '\n';
    }
    return kOk;
  }

  if (*check_cmd) {
    if (samples < 1) throw ConfigError("--samples must be >= 1", 0, "samples");
    const auto lines = run_checks(samples, check_seed);
    bool all = true;
    for (const auto& l : lines) {
      std::printf("%s %-28s worst %.3e (tolerance %.0e)\n", l.pass ? "PASS" : "FAIL", l.name.c_str(), l.worst,
                  l.tolerance);
      all = all && l.pass;
    }
    if (!all) throw NumericFailure("self-test failed");
    return kOk;
  }
  return kConfig;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const renyient::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const renyient::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const renyient::RangeError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  }
}
