// Copyright 2026 The wsnsynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks for the generator, analysis and reporting pipeline. Prints
// one PASS/FAIL line per criterion and exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cli.h"
#include "wsnsynth/critical_values.h"
#include "wsnsynth/deployment.h"
#include "wsnsynth/io.h"
#include "wsnsynth/randomness_tests.h"
#include "wsnsynth/reference_data.h"
#include "wsnsynth/reproduction.h"
#include "wsnsynth/suite.h"
#include "wsnsynth/topology.h"
#include "wsnsynth/traffic.h"

namespace wsnsynth {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

int failures = 0;

void Report(int id, bool pass, const std::string& summary) {
  std::printf("AC%d %s  %s\n", id, pass ? "PASS" : "FAIL", summary.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string Fmt(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// 1. Seed -> (a, c) for the 20 published seeds, compared at 6 decimals.
void ConstantDerivation() {
  const auto start = Clock::now();
  int matched = 0;
  for (const auto& row : ReferenceSeedRows()) {
    const Constants k = DeriveConstants(row.seed);
    matched += std::llround(k.a * 1e6) == std::llround(row.a * 1e6);
    matched += std::llround(k.c * 1e6) == std::llround(row.c * 1e6);
  }
  const double t = Seconds(start);
  Report(1, matched == 40 && t < 1.0, Fmt("%d/40 constants match, %.3fs (limit 1s)", matched, t));
}

// 2. Ten repeated deploy / traffic invocations give byte-identical files.
int RunCliArgs(std::vector<std::string> args) {
  args.insert(args.begin(), "wsnsynth");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

void Determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "wsnsynth_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::vector<std::vector<std::string>> commands = {
      {"deploy", "--seed", "43", "--mode", "grid"},
      {"deploy", "--seed", "3", "--format", "json"},
      {"traffic", "--nodes", "80", "--dist", "uniform"},
      {"traffic", "--nodes", "80", "--dist", "exp-transform", "--format", "json"},
      {"traffic", "--nodes", "80", "--dist", "exp-recurrence"},
  };
  const auto start = Clock::now();
  bool ok = true;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::string first;
    for (int rep = 0; rep < 10; ++rep) {
      const std::string path = (dir / ("out" + std::to_string(c) + "_" + std::to_string(rep))).string();
      auto args = commands[c];
      args.insert(args.end(), {"--out", path});
      if (RunCliArgs(args) != 0) ok = false;
      const std::string bytes = ReadFile(path);
      if (rep == 0) first = bytes;
      ok = ok && bytes == first && !bytes.empty();
    }
  }
  const double t = Seconds(start);
  std::filesystem::remove_all(dir);
  Report(2, ok && t < 5.0,
         Fmt("%zu commands x 10 runs byte-identical=%s, %.3fs (limit 5s)", commands.size(),
             ok ? "yes" : "no", t));
}

// 3. Exact quadrant translation for 100 random (seed, n, area) triples and the
// y = x diagonal when a = c.
void GridSymmetry() {
  std::mt19937_64 rng(20260101);
  std::size_t points = 0, translation_mismatch = 0, subtraction_inexact = 0, off_diagonal = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t seed = rng() % 100000;
    const std::size_t n = 4 + rng() % 400;
    const double area = 1.0 + static_cast<double>(rng() % 1000000) / 997.0;
    const double m1 = area / 2.0;
    const Deployment d = DeployGrid(n, area, seed);
    const std::size_t block = (n + 3) / 4;
    const Point shifts[4] = {{0, 0}, {m1, m1}, {m1, 0}, {0, m1}};
    for (std::size_t q = 1; q < 4; ++q) {
      for (std::size_t k = 0; k < block && q * block + k < n; ++k) {
        const Point p = d.points[k];
        const Point g = d.points[q * block + k];
        ++points;
        if (g.x != p.x + shifts[q].x || g.y != p.y + shifts[q].y) ++translation_mismatch;
        if (g.x - p.x != shifts[q].x || g.y - p.y != shifts[q].y) ++subtraction_inexact;
      }
    }
    DeploymentOptions degenerate;
    const double a = DeriveConstants(seed).a;
    degenerate.constants = Constants{a, a};
    degenerate.allow_degenerate = true;
    for (const Point& p : DeployNonGrid(n, area, seed, degenerate).points) off_diagonal += p.x != p.y;
  }
  Report(3, translation_mismatch == 0 && off_diagonal == 0,
         Fmt("%zu translated points: %zu differ from p + shift; %zu off-diagonal points with a = c "
             "(difference-form check: %zu of %zu subtractions round away from the shift)",
             points, translation_mismatch, off_diagonal, subtraction_inexact, points));
}

// 4. KS and chi-square statistics against independent oracles.
double BruteForceKs(const std::vector<double>& s) {
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (double x : s) {
    const auto le = std::count_if(s.begin(), s.end(), [&](double v) { return v <= x; });
    const auto lt = std::count_if(s.begin(), s.end(), [&](double v) { return v < x; });
    d = std::max({d, static_cast<double>(le) / n - x, x - static_cast<double>(lt) / n});
  }
  return d;
}

double RationalChi2(const std::vector<double>& s, std::size_t k) {
  using Q = boost::rational<long long>;
  std::vector<long long> counts(k, 0);
  for (double v : s) ++counts[std::min<std::size_t>(static_cast<std::size_t>(v * k), k - 1)];
  const Q expected(static_cast<long long>(s.size()), static_cast<long long>(k));
  Q sum = 0;
  for (long long c : counts) sum += (Q(c) - expected) * (Q(c) - expected) / expected;
  return static_cast<double>(sum.numerator()) / static_cast<double>(sum.denominator());
}

void StatisticOracles() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double max_ks = 0.0;
  int chi2_mismatch = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 10 + rng() % 41;  // 10..50
    std::vector<double> s(n);
    for (double& v : s) v = u(rng);
    max_ks = std::max(max_ks, std::fabs(KsTest(s, 0.01).statistic - BruteForceKs(s)));
    chi2_mismatch += Chi2Test(s, 2, 0.001).statistic != RationalChi2(s, 2);
  }
  const double d = ComputeKsStatistic(std::vector<double>{0.05, 0.14, 0.44, 0.81, 0.93}).d;
  Report(4, max_ks <= 1e-12 && chi2_mismatch == 0 && d == 0.26,
         Fmt("max |KS - oracle| = %.3g (limit 1e-12), chi2 mismatches %d/1000, worked D == 0.26: %s",
             max_ks, chi2_mismatch, d == 0.26 ? "yes" : "no"));
}

// 5. Inverse transform and the minimum-of-exponentials law.
void DistributionLaws() {
  const auto start = Clock::now();
  std::mt19937_64 rng(12345);
  const std::size_t n = 100000;
  std::vector<double> back(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double x = ExpInverseTransform(r, 1.0);
    sum += x;
    back[i] = -std::expm1(-x);  // Exp(1) CDF
    if (back[i] >= 1.0) back[i] = std::nextafter(1.0, 0.0);
  }
  const double mean = sum / static_cast<double>(n);
  const TestReport ks = KsTest(back, 0.01);
  const double rates[] = {1.0, 2.0, 3.0};
  const MinExponentialsResult m = MinExponentialsCheck(rates, n);
  double max_freq_err = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    max_freq_err = std::max(max_freq_err, std::fabs(m.selection_freqs[k] - rates[k] / 6.0));
  }
  const double rate_err = std::fabs(m.empirical_rate - 6.0) / 6.0;
  const double t = Seconds(start);
  const bool pass = mean >= 0.98 && mean <= 1.02 && ks.satisfied() && rate_err <= 0.03 &&
                    max_freq_err <= 0.02 && t < 30.0;
  Report(5, pass,
         Fmt("mean %.5f in [0.98, 1.02]; KS D = %.5f vs %.5f %s; min-rate %.4f (%.2f%%, limit 3%%); "
             "max freq error %.4f (limit 0.02); %.2fs (limit 30s)",
             mean, ks.statistic, ks.critical_value, std::string(ToString(ks.verdict)).c_str(),
             m.empirical_rate, 100 * rate_err, max_freq_err, t));
}

// 6. Isolated counts are non-increasing in the transmission range.
void Monotonicity() {
  int violations = 0, checked = 0;
  for (const auto& row : ReferenceSeedRows()) {
    for (DeploymentMode mode : {DeploymentMode::kNonGrid, DeploymentMode::kGrid}) {
      const Deployment d = Deploy(mode, 100, 100, row.seed);
      const auto c = IsolatedCounts(d.points, kReferenceRanges, 0.0);
      const auto s = serial::IsolatedCounts(d.points, kReferenceRanges, 0.0);
      ++checked;
      violations += !(c[0] >= c[1] && c[1] >= c[2]) || c != s;
    }
  }
  Report(6, violations == 0, Fmt("%d/%d seed-mode rows non-increasing across TR 10, 15, 20", checked - violations, checked));
}

// 7. Seed-table reproduction at n = 100, area 100 x 100.
void SeedTableReproduction() {
  std::vector<std::uint64_t> seeds;
  for (const auto& row : ReferenceSeedRows()) seeds.push_back(row.seed);
  const auto rows = BuildSeedReport(seeds);
  const auto agreement = CompareWithReference(rows, kReferenceRanges);
  std::size_t iso = 0, verdicts = 0, auto_ok = 0;
  for (const auto& a : agreement) {
    iso += a.isolated_matches;
    verdicts += a.verdict_matches;
  }
  for (const auto& r : rows) {
    auto_ok += r.non_grid.autocorrelation == Verdict::kSatisfied;
    auto_ok += r.grid.autocorrelation == Verdict::kSatisfied;
  }
  std::printf("%s", RenderAgreement(agreement).c_str());
  Report(7, auto_ok == 40 && agreement.size() == 20,
         Fmt("autocorrelation Satisfied in %zu/40 cells; agreement: isolated %zu/120, verdicts %zu/120",
             auto_ok, iso, verdicts));
}

// 8. Packet-table reproduction attempt with P1 = 2, P2 = 10, 80 x 5.
void TrafficTableReproduction() {
  const auto diffs = CompareTrafficWithReference();
  std::printf("%s", RenderTrafficDiff(diffs).c_str());
  bool in_range = !diffs.empty();
  for (const auto& d : diffs) in_range = in_range && d.in_range && d.cells == 400;
  Report(8, in_range, Fmt("diff report over %zu generator/block pairs; all values in [2, 10): %s",
                          diffs.size(), in_range ? "yes" : "no"));
}

// 9. Equal-width windows at ten positions of a 10^5-value uniform packet
// stream. Under uniformity each window count is approximately Poisson(f),
// so two counts differ by about N(0, 2f); the pinned tolerance is
// sqrt(2 f chi2_{9, 0.05}).
void UniformIntervalProperty() {
  const TrafficMatrix t = TrafficUniform(20000, 5, 2, 10);
  const auto s = Normalize(t.values(), t.p_min, t.p_max);
  const double width = 0.05;
  std::vector<double> counts(10, 0.0);
  for (double v : s) {
    for (std::size_t k = 0; k < 10; ++k) {
      const double lo = static_cast<double>(k) / 10.0;
      if (v >= lo && v < lo + width) counts[k] += 1.0;
    }
  }
  const double mean = std::accumulate(counts.begin(), counts.end(), 0.0) / 10.0;
  const double tol = std::sqrt(2.0 * Chi2CriticalValue(9, 0.05) * mean);
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  const double spread = *hi - *lo;
  std::string list;
  for (double c : counts) list += Fmt("%.0f ", c);
  Report(9, spread < tol,
         Fmt("window counts [%s] max pairwise difference %.0f vs bound %.1f", list.c_str(), spread,
             tol));
}

}  // namespace
}  // namespace wsnsynth

int main() {
  using namespace wsnsynth;
  ConstantDerivation();
  Determinism();
  GridSymmetry();
  StatisticOracles();
  DistributionLaws();
  Monotonicity();
  SeedTableReproduction();
  TrafficTableReproduction();
  UniformIntervalProperty();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
