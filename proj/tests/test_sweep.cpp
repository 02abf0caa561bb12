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

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "renyient/sweep.hpp"

namespace renyient {
namespace {

namespace fs = std::filesystem;

SweepConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_sweep_config(in);
}

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

const char* kSmall =
    "model = XXZ\n"
    "j = 1\n"
    "delta = 0.5\n"
    "axis = temp\n"
    "values = 0.5, 1.5\n"
    "alphas = 1, 2:sand\n"
    "restarts = 2\n"
    "seed = 5\n";

/// Fresh scratch directory per test.
class SweepDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("renyient-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(Config, ParsesFullGrammar) {
  const auto c = parse(
      "# comment line\n"
      "model = xyz   # trailing comment\n"
      "jx = 0.8\njy = 0.5\njz = 1\n"
      "temp = 0.7\n"
      "axis = jz\n"
      "linspace = 0, 2, 5\n"
      "alphas = 0.7:trad, 1, 3:sand\n"
      "restarts = 3\nmax_iters = 50\ntol = 1e-6\ncomponents = 12\nseed = 9\nfloor = 1e-11\n"
      "out = x.csv\ncache_dir = cache\nworkers = 2\nmax_unconverged_fraction = 0.5\n");
  EXPECT_EQ(c.base.model, Model::XYZ);
  EXPECT_EQ(c.base.jx, 0.8);
  EXPECT_EQ(c.grid, (std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0}));
  ASSERT_EQ(c.alphas.size(), 3u);
  EXPECT_EQ(c.alphas[1].variant, Variant::Traditional);
  EXPECT_EQ(c.alphas[2].variant, Variant::Sandwiched);
  EXPECT_EQ(c.optimizer.restarts, 3);
  EXPECT_EQ(c.optimizer.components, 12);
  EXPECT_EQ(c.optimizer.seed, 9u);
  EXPECT_EQ(c.workers, 2);
  EXPECT_EQ(c.params_at(1.5).jz, 1.5);
  EXPECT_EQ(c.temp_at(1.5), 0.7);
}

TEST(Config, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("model = XXZ\naxis = temp\nvalues = 1\nalphas = 1\ncolour = blue\n"), 5);
  EXPECT_EQ(error_line("model = XXZ\naxis = temp\nvalues = 1\nalphas =\n"), 4);
  EXPECT_EQ(error_line("model = XXZ\naxis = temp\nvalues = 1\nalphas = 3\n"), 4);
  EXPECT_EQ(error_line("model = XXZ\naxis = temp\nvalues = 1\nalphas = 0.3:sand\n"), 4);
  EXPECT_EQ(error_line("model = XXZ\naxis = temp\nvalues = 1, x\nalphas = 1\n"), 3);
  EXPECT_EQ(error_line("model = XXZ\nmodel = XY\n"), 2);
  EXPECT_EQ(error_line("model = XXZ\naxis = gamma\nvalues = 1\nalphas = 1\n"), 2);
  EXPECT_EQ(error_line("model = XXZ\ndelta = -2\naxis = temp\nvalues = 1\nalphas = 1\n"), 2);
  EXPECT_EQ(error_line("model = XY\naxis = gamma\nvalues = 0.5, 1.5\nalphas = 1\n"), 3);
  EXPECT_EQ(error_line("model = XXZ\naxis = temp\nvalues = 0, 1\nalphas = 1\n"), 3);
  EXPECT_EQ(error_line("model = XXZ\naxis = temp\nvalues = 1\nalphas = 1\nrestarts = 0\n"), 0);
  EXPECT_EQ(error_line("model = XXZ\njx = 1\naxis = temp\nvalues = 1\nalphas = 1\n"), 2);
  EXPECT_EQ(error_line("just text\n"), 1);
  EXPECT_THROW(parse("model = XXZ\naxis = temp\nvalues = 1\n"), ConfigError);
}

TEST(Config, MissingFileIsIoError) { EXPECT_THROW(load_sweep_config("/nonexistent/sweep.cfg"), IoError); }

TEST(Csv, Formatting) {
  EXPECT_EQ(format9(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format9(0.1234567891234), "0.123456789");
  EXPECT_EQ(round9(0.1234567891234), 0.123456789);
}

TEST(Csv, RoundTrip) {
  SweepRow a{"XYZ", "temp", 0.25, 0.25, 0.7, Variant::Traditional, 0.1, 0.0, 1e-9, 0.1 - 1e-9, true, 16, 123456789012345ull, 12.5};
  SweepRow b{"TFI", "lambda", 2, 1, 8, Variant::Sandwiched, std::numeric_limits<double>::infinity(), 0.25, 0.5, -0.003, false, 4, 7, 0};
  const std::vector<SweepRow> rows{a, b};
  std::stringstream ss;
  write_csv(ss, rows);
  EXPECT_EQ(ss.str().substr(0, kCsvHeader.size()), kCsvHeader);
  EXPECT_EQ(read_csv(ss), rows);
  EXPECT_THROW(parse_csv_line("XYZ,temp,1"), ConfigError);
  std::istringstream bad_header("model,temp\n");
  EXPECT_THROW(read_csv(bad_header), ConfigError);
}

TEST(CacheKey, SensitiveToEveryInput) {
  const auto params = ModelParams::xxz(1.0, 0.5);
  const OptimizerOptions o;
  const auto k = cache_key(params, 1.0, RenyiParameter::traditional(1.0), o);
  EXPECT_EQ(k, cache_key(params, 1.0, RenyiParameter::traditional(1.0), o));
  EXPECT_NE(k, cache_key(params, 1.0 + 1e-15, RenyiParameter::traditional(1.0), o));
  EXPECT_NE(k, cache_key(params, 1.0, RenyiParameter::sandwiched(1.0), o));
  EXPECT_NE(k, cache_key(ModelParams::xxz(1.0, 0.6), 1.0, RenyiParameter::traditional(1.0), o));
  OptimizerOptions o2 = o;
  o2.restarts = 3;
  EXPECT_NE(k, cache_key(params, 1.0, RenyiParameter::traditional(1.0), o2));
  o2 = o;
  o2.seed = 1;
  EXPECT_NE(k, cache_key(params, 1.0, RenyiParameter::traditional(1.0), o2));
}

TEST_F(SweepDir, RowsOrderedAndAssembled) {
  const auto c = parse(kSmall);
  const auto res = run_sweep(c);
  ASSERT_EQ(res.rows.size(), 4u);
  EXPECT_EQ(res.stats.computed, 4u);
  EXPECT_EQ(res.rows[0].temp, 0.5);
  EXPECT_EQ(res.rows[1].temp, 0.5);
  EXPECT_EQ(res.rows[2].temp, 1.5);
  EXPECT_EQ(res.rows[0].variant, Variant::Traditional);
  EXPECT_EQ(res.rows[1].variant, Variant::Sandwiched);
  EXPECT_EQ(res.rows[0].seed, mix_seed(5, 0));
  EXPECT_EQ(res.rows[2].seed, mix_seed(5, 1));
  for (const auto& r : res.rows) {
    // Each field carries at most half a unit in the ninth digit of rounding.
    EXPECT_NEAR(r.m, r.e_1_23 - r.e_1_2 - r.e_1_3, 1e-8);
    EXPECT_EQ(r.model, "XXZ");
    EXPECT_EQ(r.param_name, "temp");
    EXPECT_EQ(r.restarts_used, 2);
  }
}

TEST_F(SweepDir, DeterministicAcrossWorkerCounts) {
  auto c = parse(kSmall);
  auto a = run_sweep(c).rows;
  c.workers = 3;
  auto b = run_sweep(c).rows;
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i].walltime_ms = b[i].walltime_ms = 0;
    EXPECT_EQ(a[i], b[i]) << i;
  }
}

TEST_F(SweepDir, CacheRerunComputesNothing) {
  const auto c = parse(kSmall);
  std::ostringstream warnings;
  std::vector<SweepRow> first;
  {
    RowCache cache(dir_ / "cache", &warnings);
    const auto r = run_sweep(c, &cache);
    EXPECT_EQ(r.stats.computed, 4u);
    first = r.rows;
    save_csv((dir_ / "a.csv").string(), r.rows);
  }
  RowCache cache(dir_ / "cache", &warnings);
  EXPECT_EQ(cache.size(), 4u);
  const auto r = run_sweep(c, &cache);
  EXPECT_EQ(r.stats.computed, 0u);
  EXPECT_EQ(r.stats.cache_hits, 4u);
  EXPECT_EQ(r.rows, first);
  save_csv((dir_ / "b.csv").string(), r.rows);
  std::ifstream fa(dir_ / "a.csv"), fb(dir_ / "b.csv");
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_TRUE(warnings.str().empty());
}

TEST_F(SweepDir, CorruptCacheLinesAreSkipped) {
  const auto c = parse(kSmall);
  {
    RowCache cache(dir_ / "cache", nullptr);
    run_sweep(c, &cache);
  }
  // Damage one record: flip a digit inside its CSV body.
  fs::path rec;
  for (const auto& e : fs::directory_iterator(dir_ / "cache"))
    if (e.path().extension() == ".rec") rec = e.path();
  std::ifstream in(rec);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  in.close();
  ASSERT_EQ(lines.size(), 4u);
  const auto pos = lines[1].find("XXZ,temp,");
  lines[1][pos + 9] = lines[1][pos + 9] == '1' ? '2' : '1';
  lines.push_back("garbage without tabs");
  std::ofstream out(rec, std::ios::trunc);
  for (const auto& l : lines) out << l << '\n';
  out.close();

  std::ostringstream warnings;
  RowCache cache(dir_ / "cache", &warnings);
  EXPECT_EQ(cache.skipped(), 2u);
  EXPECT_EQ(cache.size(), 3u);
  EXPECT_NE(warnings.str().find("checksum"), std::string::npos);
  const auto r = run_sweep(c, &cache);
  EXPECT_EQ(r.stats.computed, 1u);
  EXPECT_EQ(r.stats.cache_hits, 3u);
}

TEST_F(SweepDir, SaveCsvAndWritability) {
  const std::vector<SweepRow> rows{SweepRow{"XY", "gamma", 0.5, 1, 1, Variant::Traditional, 0.2, 0.01, 0.01, 0.18, true, 2, 1, 3}};
  const auto path = (dir_ / "out.csv").string();
  require_writable(path);
  save_csv(path, rows);
  std::ifstream in(path);
  EXPECT_EQ(read_csv(in), rows);
  EXPECT_FALSE(fs::exists(path + ".tmp"));
  EXPECT_THROW(require_writable("/nonexistent-dir/x.csv"), IoError);
  EXPECT_THROW(save_csv("/nonexistent-dir/x.csv", rows), IoError);
}

}  // namespace
}  // namespace renyient
