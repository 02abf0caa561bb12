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

// Parameter sweeps over thermal spin-chain states: config parsing, CSV
// persistence, and an append-only result cache.
//
// Config grammar (one entry per line, '#' starts a comment):
//
//   line      := blank | key '=' value
//   model     := XYZ | XXZ | XY | TFI                       (required)
//   jx jy jz j delta gamma lambda temp := real            (fixed couplings)
//   axis      := temp | jx | jy | jz | j | delta | gamma | lambda   (required)
//   values    := real {',' real}                           (one of values /
//   linspace  := start ',' stop ',' count                   linspace required)
//   alphas    := entry {',' entry}; entry := real [':' (trad|sand)]  (required)
//   restarts max_iters components workers := integer
//   tol floor max_unconverged_fraction := real
//   seed      := unsigned integer
//   out cache_dir := path
//
// Unknown or repeated keys are errors.

#pragma once

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "renyient/error.hpp"
#include "renyient/monogamy.hpp"
#include "renyient/parallel.hpp"
#include "renyient/renyi.hpp"
#include "renyient/sepstates.hpp"
#include "renyient/spinchain.hpp"

namespace renyient {

// ---------------------------------------------------------------------------
// Number formatting

/// Value as printed with 9 significant digits, read back.
inline double round9(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::strtod(buf, nullptr);
}

inline std::string format9(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

/// Exact (round-trip) decimal form used in cache keys.
inline std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

// ---------------------------------------------------------------------------
// Config

struct SweepConfig {
  ModelParams base;
  double temp = 1.0;
  std::string axis;
  std::vector<double> grid;
  std::vector<RenyiParameter> alphas;
  OptimizerOptions optimizer;
  std::string out;
  std::string cache_dir;
  int workers = 1;
  double max_unconverged_fraction = 0.25;

  /// Model parameters at one grid point.
  ModelParams params_at(double value) const {
    ModelParams p = base;
    if (axis != "temp") p.set(axis, value);
    return p;
  }
  double temp_at(double value) const { return axis == "temp" ? value : temp; }

  void validate() const {
    if (axis.empty()) throw ConfigError("missing 'axis'", 0, "axis");
    if (axis != "temp" && !base.uses(axis))
      throw ConfigError("axis '" + axis + "' is not a parameter of model " + std::string(to_string(base.model)), 0,
                        "axis");
    if (grid.empty()) throw ConfigError("grid is empty (set 'values' or 'linspace')", 0, "values");
    if (alphas.empty()) throw ConfigError("alpha list is empty", 0, "alphas");
    for (const auto& a : alphas) {
      if (!a.admissible())
        throw ConfigError("alpha " + format9(a.alpha) + " is outside the " + std::string(to_string(a.variant)) +
                              " range",
                          0, "alphas");
      if (a.variant == Variant::Sandwiched && a.alpha > kMaxSandwichedAlpha)
        throw ConfigError("sandwiched alpha above 64 is not supported", 0, "alphas");
    }
    for (double v : grid) {
      if (!std::isfinite(v)) throw ConfigError("grid value is not finite", 0, "values");
      if (!(temp_at(v) > 0.0)) throw ConfigError("temperature must be positive", 0, axis == "temp" ? "values" : "temp");
      try {
        params_at(v).validate();
      } catch (const RangeError& e) {
        // Only delta and gamma carry range limits; blame whichever line set the bad one.
        const char* guarded = base.model == Model::XXZ ? "delta" : base.model == Model::XY ? "gamma" : nullptr;
        if (guarded && axis != guarded) throw ConfigError(e.what(), 0, guarded);
        throw ConfigError(std::string("grid value ") + format9(v) + ": " + e.what(), 0, "values");
      }
    }
    try {
      optimizer.validate();
    } catch (const RangeError& e) {
      throw ConfigError(e.what());
    }
    if (workers < 1) throw ConfigError("workers must be >= 1", 0, "workers");
    if (!(max_unconverged_fraction >= 0.0 && max_unconverged_fraction <= 1.0))
      throw ConfigError("max_unconverged_fraction must lie in [0, 1]", 0, "max_unconverged_fraction");
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline double parse_real(const std::string& s, int line, const std::string& field) {
  if (s.empty()) throw ConfigError("empty number", line, field);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw ConfigError("'" + s + "' is not a number", line, field);
  return v;
}

inline long long parse_integer(const std::string& s, int line, const std::string& field) {
  if (s.empty()) throw ConfigError("empty integer", line, field);
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) throw ConfigError("'" + s + "' is not an integer", line, field);
  return v;
}

inline std::uint64_t parse_unsigned(const std::string& s, int line, const std::string& field) {
  if (s.empty() || s[0] == '-') throw ConfigError("'" + s + "' is not an unsigned integer", line, field);
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) throw ConfigError("'" + s + "' is not an unsigned integer", line, field);
  return v;
}

}  // namespace detail

/// Parses the alphas list, e.g. "0.7:trad, 1, 3:sand". A bare alpha is traditional.
inline std::vector<RenyiParameter> parse_alpha_list(const std::string& text, int line = 0) {
  std::vector<RenyiParameter> out;
  if (detail::trim(text).empty()) return out;
  for (const auto& item : detail::split(text, ',')) {
    const auto parts = detail::split(item, ':');
    if (parts.size() > 2) throw ConfigError("bad alpha entry '" + item + "'", line, "alphas");
    RenyiParameter p{detail::parse_real(parts[0], line, "alphas"), Variant::Traditional};
    if (parts.size() == 2) {
      const auto v = parse_variant(parts[1]);
      if (!v) throw ConfigError("unknown variant '" + parts[1] + "'", line, "alphas");
      p.variant = *v;
    }
    out.push_back(p);
  }
  return out;
}

inline SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig c;
  std::map<std::string, int> seen;
  std::optional<std::vector<double>> values, linspace;
  bool have_model = false;
  std::map<std::string, std::pair<double, int>> couplings;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = detail::trim(std::string_view(raw).substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line);
    const std::string key = detail::trim(std::string_view(text).substr(0, eq));
    const std::string value = detail::trim(std::string_view(text).substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key", line);
    if (seen.count(key)) throw ConfigError("duplicate key '" + key + "'", line, key);
    seen[key] = line;

    if (key == "model") {
      const auto m = parse_model(value);
      if (!m) throw ConfigError("unknown model '" + value + "'", line, key);
      c.base.model = *m;
      have_model = true;
    } else if (ModelParams::is_parameter_name(key)) {
      couplings[key] = {detail::parse_real(value, line, key), line};
    } else if (key == "temp") {
      c.temp = detail::parse_real(value, line, key);
    } else if (key == "axis") {
      if (value != "temp" && !ModelParams::is_parameter_name(value))
        throw ConfigError("unknown axis '" + value + "'", line, key);
      c.axis = value;
    } else if (key == "values") {
      std::vector<double> v;
      for (const auto& item : detail::split(value, ',')) v.push_back(detail::parse_real(item, line, key));
      values = v;
    } else if (key == "linspace") {
      const auto parts = detail::split(value, ',');
      if (parts.size() != 3) throw ConfigError("linspace needs 'start, stop, count'", line, key);
      const double a = detail::parse_real(parts[0], line, key), b = detail::parse_real(parts[1], line, key);
      const long long n = detail::parse_integer(parts[2], line, key);
      if (n < 1) throw ConfigError("linspace count must be >= 1", line, key);
      std::vector<double> v(static_cast<std::size_t>(n));
      for (long long i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1);
      if (n > 1) v.back() = b;
      linspace = v;
    } else if (key == "alphas") {
      c.alphas = parse_alpha_list(value, line);
      if (c.alphas.empty()) throw ConfigError("alpha list is empty", line, key);
      for (const auto& a : c.alphas)
        if (!a.admissible() || (a.variant == Variant::Sandwiched && a.alpha > kMaxSandwichedAlpha))
          throw ConfigError("alpha " + format9(a.alpha) + " is outside the " + std::string(to_string(a.variant)) +
                                " range",
                            line, key);
    } else if (key == "restarts") {
      c.optimizer.restarts = static_cast<int>(detail::parse_integer(value, line, key));
    } else if (key == "max_iters") {
      c.optimizer.max_iters = static_cast<int>(detail::parse_integer(value, line, key));
    } else if (key == "tol") {
      c.optimizer.tol_objective = detail::parse_real(value, line, key);
    } else if (key == "components") {
      c.optimizer.components = static_cast<int>(detail::parse_integer(value, line, key));
    } else if (key == "seed") {
      c.optimizer.seed = detail::parse_unsigned(value, line, key);
    } else if (key == "floor") {
      c.optimizer.floor = detail::parse_real(value, line, key);
    } else if (key == "out") {
      c.out = value;
    } else if (key == "cache_dir") {
      c.cache_dir = value;
    } else if (key == "workers") {
      c.workers = static_cast<int>(detail::parse_integer(value, line, key));
    } else if (key == "max_unconverged_fraction") {
      c.max_unconverged_fraction = detail::parse_real(value, line, key);
    } else {
      throw ConfigError("unknown key '" + key + "'", line, key);
    }
  }
  if (!have_model) throw ConfigError("missing 'model'", 0, "model");
  for (const auto& [name, entry] : couplings) {
    if (!c.base.uses(name))
      throw ConfigError("'" + name + "' is not a parameter of model " + std::string(to_string(c.base.model)),
                        entry.second, name);
    c.base.set(name, entry.first);
  }
  if (values && linspace) throw ConfigError("set only one of 'values' and 'linspace'", seen["linspace"], "linspace");
  if (values) c.grid = *values;
  if (linspace) c.grid = *linspace;
  if (!seen.count("alphas")) throw ConfigError("missing 'alphas'", 0, "alphas");
  auto at_line = [&](const ConfigError& e) {
    const auto it = seen.find(e.field());
    return it == seen.end() ? e : ConfigError(e.what(), it->second, e.field());
  };
  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw at_line(e);
  }
  return c;
}

inline SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  return parse_sweep_config(in);
}

// ---------------------------------------------------------------------------
// Rows and CSV

inline constexpr std::string_view kCsvHeader =
    "model,param_name,param_value,temp,alpha,variant,e_1_23,e_1_2,e_1_3,m,converged,restarts_used,seed,walltime_ms";

/// One plotted point. Real fields hold exactly the values their CSV form
/// parses back to, so parse(emit(rows)) == rows.
struct SweepRow {
  std::string model;
  std::string param_name;
  double param_value = 0.0;
  double temp = 0.0;
  double alpha = 1.0;
  Variant variant = Variant::Traditional;
  double e_1_23 = 0.0, e_1_2 = 0.0, e_1_3 = 0.0, m = 0.0;
  bool converged = false;
  int restarts_used = 0;
  std::uint64_t seed = 0;
  double walltime_ms = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline std::string to_csv_line(const SweepRow& r) {
  std::ostringstream os;
  os << r.model << ',' << r.param_name << ',' << format9(r.param_value) << ',' << format9(r.temp) << ','
     << format9(r.alpha) << ',' << to_string(r.variant) << ',' << format9(r.e_1_23) << ',' << format9(r.e_1_2) << ','
     << format9(r.e_1_3) << ',' << format9(r.m) << ',' << (r.converged ? 1 : 0) << ',' << r.restarts_used << ','
     << r.seed << ',' << format9(r.walltime_ms);
  return os.str();
}

inline SweepRow parse_csv_line(const std::string& text) {
  const auto f = detail::split(text, ',');
  if (f.size() != 14) throw ConfigError("CSV row has " + std::to_string(f.size()) + " fields, expected 14");
  auto real = [](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw ConfigError("CSV field '" + s + "' is not a number");
    return v;
  };
  SweepRow r;
  r.model = f[0];
  r.param_name = f[1];
  r.param_value = real(f[2]);
  r.temp = real(f[3]);
  r.alpha = real(f[4]);
  const auto v = parse_variant(f[5]);
  if (!v) throw ConfigError("CSV variant '" + f[5] + "' is invalid");
  r.variant = *v;
  r.e_1_23 = real(f[6]);
  r.e_1_2 = real(f[7]);
  r.e_1_3 = real(f[8]);
  r.m = real(f[9]);
  if (f[10] != "0" && f[10] != "1") throw ConfigError("CSV converged flag '" + f[10] + "' is invalid");
  r.converged = f[10] == "1";
  r.restarts_used = static_cast<int>(detail::parse_integer(f[11], 0, "restarts_used"));
  r.seed = detail::parse_unsigned(f[12], 0, "seed");
  r.walltime_ms = real(f[13]);
  return r;
}

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) os << to_csv_line(r) << '\n';
}

inline std::vector<SweepRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || detail::trim(line) != kCsvHeader) throw ConfigError("CSV header mismatch");
  std::vector<SweepRow> rows;
  while (std::getline(is, line))
    if (!detail::trim(line).empty()) rows.push_back(parse_csv_line(detail::trim(line)));
  return rows;
}

// ---------------------------------------------------------------------------
// Cache

/// Append-only row cache. `index` lists the record files; each record line is
/// "key<TAB>csv row<TAB>checksum" with checksum = FNV-1a of "key<TAB>row".
/// Lines that fail the checksum or do not parse are skipped with a warning.
class RowCache {
 public:
  RowCache() = default;
  explicit RowCache(std::filesystem::path dir, std::ostream* warnings = &std::cerr)
      : dir_(std::move(dir)), warn_(warnings) {
    load();
  }

  bool enabled() const noexcept { return !dir_.empty(); }
  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t skipped() const noexcept { return skipped_; }

  std::optional<SweepRow> find(const std::string& key) const {
    std::lock_guard lock(mu_);
    const auto it = rows_.find(key);
    if (it == rows_.end()) return std::nullopt;
    return it->second;
  }

  /// Records a computed row; the first call of a run creates this run's record file.
  void store(const std::string& key, const SweepRow& row) {
    if (!enabled()) return;
    std::lock_guard lock(mu_);
    if (!writer_.is_open()) open_run_file();
    const std::string body = key + '\t' + to_csv_line(row);
    writer_ << body << '\t' << hex64(fnv1a(body)) << '\n';
    writer_.flush();
    if (!writer_) throw IoError("cache: write to " + run_file_.string() + " failed");
    rows_[key] = row;
  }

  static std::string checksum_line(const std::string& key, const SweepRow& row) {
    const std::string body = key + '\t' + to_csv_line(row);
    return body + '\t' + hex64(fnv1a(body));
  }

 private:
  void warn(const std::string& msg) {
    ++skipped_;
    if (warn_) *warn_ << "warning: " << msg << '\n';
  }

  void load() {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw IoError("cache: cannot create directory " + dir_.string() + ": " + ec.message());
    std::ifstream index(dir_ / "index");
    std::string name;
    while (std::getline(index, name)) {
      name = detail::trim(name);
      if (name.empty()) continue;
      if (name.find('/') != std::string::npos || name.find("..") != std::string::npos) {
        warn("cache: ignoring suspicious index entry '" + name + "'");
        continue;
      }
      std::ifstream rec(dir_ / name);
      if (!rec) {
        warn("cache: record file '" + name + "' is missing");
        continue;
      }
      std::string line;
      int n = 0;
      while (std::getline(rec, line)) {
        ++n;
        const auto t1 = line.find('\t');
        const auto t2 = line.rfind('\t');
        if (t1 == std::string::npos || t2 == t1) {
          warn("cache: " + name + ":" + std::to_string(n) + " is malformed, skipped");
          continue;
        }
        const std::string body = line.substr(0, t2);
        if (hex64(fnv1a(body)) != line.substr(t2 + 1)) {
          warn("cache: " + name + ":" + std::to_string(n) + " fails its checksum, skipped");
          continue;
        }
        try {
          rows_[line.substr(0, t1)] = parse_csv_line(body.substr(t1 + 1));
        } catch (const Error&) {
          warn("cache: " + name + ":" + std::to_string(n) + " does not parse, skipped");
        }
      }
    }
  }

  void open_run_file() {
    const auto stamp = std::chrono::system_clock::now().time_since_epoch().count();
    for (int attempt = 0;; ++attempt) {
      run_file_ = dir_ / ("run-" + std::to_string(stamp) + "-" + std::to_string(attempt) + ".rec");
      if (!std::filesystem::exists(run_file_)) break;
    }
    writer_.open(run_file_, std::ios::app);
    if (!writer_) throw IoError("cache: cannot create " + run_file_.string());
    std::ofstream index(dir_ / "index", std::ios::app);
    index << run_file_.filename().string() << '\n';
    if (!index) throw IoError("cache: cannot update index in " + dir_.string());
  }

  std::filesystem::path dir_;
  std::ostream* warn_ = nullptr;
  std::unordered_map<std::string, SweepRow> rows_;
  std::size_t skipped_ = 0;
  mutable std::mutex mu_;
  std::ofstream writer_;
  std::filesystem::path run_file_;
};

// ---------------------------------------------------------------------------
// Sweep

/// Canonical description of one computation; its hash is the cache key.
inline std::string cache_key(const ModelParams& params, double temp, RenyiParameter p, const OptimizerOptions& o) {
  std::ostringstream os;
  os << "model=" << to_string(params.model);
  for (const char* name : {"jx", "jy", "jz", "j", "delta", "gamma", "lambda"})
    if (params.uses(name)) os << ';' << name << '=' << format17(params.get(name));
  os << ";temp=" << format17(temp) << ";alpha=" << format17(p.alpha) << ";variant=" << to_string(p.variant)
     << ";restarts=" << o.restarts << ";max_iters=" << o.max_iters << ";tol=" << format17(o.tol_objective)
     << ";components=" << o.components << ";floor=" << format17(o.floor)
     << ";gradient=" << (o.gradient == GradientMode::Analytic ? "analytic" : "fd")
     << ";grad_step=" << format17(o.grad_step) << ";seed=" << o.seed;
  return hex64(fnv1a(os.str()));
}

struct SweepStats {
  std::size_t rows = 0;
  std::size_t computed = 0;  // monogamy evaluations actually run
  std::size_t cache_hits = 0;
  std::size_t unconverged = 0;
  double unconverged_fraction() const { return rows ? static_cast<double>(unconverged) / rows : 0.0; }
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepStats stats;
};

/// Builds the printed row from a full-precision result.
inline SweepRow make_row(const SweepConfig& c, double value, RenyiParameter p, const MonogamyResult& r,
                         std::uint64_t seed, double walltime_ms) {
  SweepRow row;
  row.model = std::string(to_string(c.base.model));
  row.param_name = c.axis;
  row.param_value = round9(value);
  row.temp = round9(c.temp_at(value));
  row.alpha = round9(p.alpha);
  row.variant = p.variant;
  row.e_1_23 = round9(r.e_1_23().nats);
  row.e_1_2 = round9(r.e_1_2().nats);
  row.e_1_3 = round9(r.e_1_3().nats);
  row.m = round9(r.m);
  row.converged = r.converged();
  row.restarts_used = r.r_1_23.restarts_used;
  row.seed = seed;
  row.walltime_ms = round9(walltime_ms);
  return row;
}

/// Runs one monogamy evaluation per (grid point, alpha entry). Rows are ordered
/// by grid index, then alpha entry. Grid point i uses seed mix_seed(config seed, i).
/// `cache` may be null. Writes nothing to disk apart from cache records.
inline SweepResult run_sweep(const SweepConfig& c, RowCache* cache = nullptr) {
  c.validate();
  const std::size_t n_alpha = c.alphas.size();
  const std::size_t jobs = c.grid.size() * n_alpha;
  std::vector<SweepRow> rows(jobs);
  std::vector<char> hit(jobs, 0);

  parallel_for(jobs, c.workers, [&](std::size_t job) {
    const std::size_t point = job / n_alpha;
    const RenyiParameter p = c.alphas[job % n_alpha];
    const double value = c.grid[point];
    OptimizerOptions opts = c.optimizer;
    opts.seed = mix_seed(c.optimizer.seed, point);
    opts.workers = 1;
    const ModelParams params = c.params_at(value);
    const double t = c.temp_at(value);
    const std::string key = cache_key(params, t, p, opts);
    if (cache) {
      if (auto row = cache->find(key)) {
        rows[job] = *row;
        hit[job] = 1;
        return;
      }
    }
    const auto start = std::chrono::steady_clock::now();
    const MonogamyResult r = monogamy(thermal_state(params, t).rho, p, opts);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows[job] = make_row(c, value, p, r, opts.seed, ms);
    if (cache) cache->store(key, rows[job]);
  });

  SweepResult out{std::move(rows), {}};
  out.stats.rows = jobs;
  for (std::size_t i = 0; i < jobs; ++i) {
    if (hit[i]) ++out.stats.cache_hits;
    else ++out.stats.computed;
    if (!out.rows[i].converged) ++out.stats.unconverged;
  }
  return out;
}

/// Writes the CSV atomically (temporary file + rename).
inline void save_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw IoError("cannot write '" + tmp.string() + "'");
    write_csv(os, rows);
    os.flush();
    if (!os) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw IoError("cannot move CSV into place at '" + path + "': " + ec.message());
}

/// Fails early when `path` cannot be created or written.
inline void require_writable(const std::string& path) {
  const std::filesystem::path p(path);
  const std::filesystem::path tmp = p.string() + ".tmp";
  std::ofstream os(tmp, std::ios::app);
  if (!os) throw IoError("output path '" + path + "' is not writable");
  os.close();
  std::error_code ec;
  std::filesystem::remove(tmp, ec);
}

}  // namespace renyient
