// Copyright 2026 The GSRP Authors
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

#include "gsrp/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "csv_util.hpp"
#include "gsrp/pipeline.hpp"

namespace gsrp {

bool GoldenResult::passed() const {
  return !assertions.empty() &&
         std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

namespace {

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ComplexVector random_vector(std::size_t m, Rng& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  ComplexVector v(m);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

// Wishart-like draw plus a small ridge: well conditioned but far from identity.
HermitianMatrix random_pd(std::size_t m, Rng& rng) {
  HermitianMatrix a(m);
  for (std::size_t j = 0; j < m; ++j) a += outer_product(random_vector(m, rng));
  return a.plus_identity(0.05 * static_cast<double>(m));
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

double max_rel_diff(const SrpMap& a, const SrpMap& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) worst = std::max(worst, rel_diff(a.values[i], b.values[i]));
  return worst;
}

double flatness(const SrpMap& map) {
  const auto [lo, hi] = std::minmax_element(map.values.begin(), map.values.end());
  return (*hi - *lo) / *hi;
}

Assertion below(int check, std::string name, double value, double limit, std::string detail = {}) {
  return {check, std::move(name), value < limit, value, limit, std::move(detail)};
}

Assertion at_least(int check, std::string name, double value, double limit, std::string detail = {}) {
  return {check, std::move(name), value >= limit, value, limit, std::move(detail)};
}

ArrayGeometry square_array() {
  ArrayGeometry g;
  g.mic_positions = {{-1.0, -1.0, 0.0}, {1.0, -1.0, 0.0}, {1.0, 1.0, 0.0}, {-1.0, 1.0, 0.0}};
  return g;
}

ArrayGeometry uca_geometry(std::size_t mics, double radius, bool oriented) {
  ArrayGeometry g;
  std::vector<Vec3> dirs;
  for (std::size_t m = 0; m < mics; ++m) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(mics);
    g.mic_positions.push_back({radius * std::cos(a), radius * std::sin(a), 0.0});
    dirs.push_back({std::cos(a), std::sin(a), 0.0});
  }
  if (oriented) g.mic_orientations = dirs;
  return g;
}

// Per-bin random statistics over the bins an engine evaluates.
std::vector<HermitianMatrix> random_spectrum(std::size_t bins, std::size_t m, Rng& rng) {
  std::vector<HermitianMatrix> out;
  out.reserve(bins);
  for (std::size_t k = 0; k < bins; ++k) out.push_back(random_pd(m, rng));
  return out;
}

CandidateGrid coarse_grid() { return CandidateGrid::planar(-1.5, 1.5, -1.5, 1.5, 0.0, 0.1); }

// --- 1 ---------------------------------------------------------------------

GoldenResult nearfield_failure() {
  const auto t0 = Clock::now();
  GoldenResult r{"nearfield_failure", {}, 0.0};
  const RunConfig base = nearfield_config(BeamformerKind::ds);
  const auto grid = build_grid(base);
  const auto model = build_model(base);
  const auto input = make_input(base);
  const std::size_t source_cell = grid.nearest(Vec3{0.0, 0.0, 0.0});
  const double half_diagonal = std::sqrt(2.0);

  for (auto kind : {BeamformerKind::ds, BeamformerKind::mvdr, BeamformerKind::mvcnr, BeamformerKind::nmf,
                    BeamformerKind::mpcnr}) {
    RunConfig cfg = base;
    cfg.beamformer = kind;
    const auto report = localize(cfg, *model, grid, input);
    const auto peak = argmax(report.average_map);
    const Vec3& est = grid.point(peak.index);
    const std::string name(to_string(kind));
    std::ostringstream where;
    where << "argmax (" << est.x << ", " << est.y << ")";
    if (kind == BeamformerKind::ds) {
      // Chebyshev cell distance to the nearest microphone cell.
      const auto [ex, ey] = grid.cell_of(peak.index);
      double best = 1e9;
      for (const auto& mic : base.geometry.mic_positions) {
        const auto [mx, my] = grid.cell_of(grid.nearest(mic));
        const double dx = std::abs(static_cast<double>(ex) - static_cast<double>(mx));
        const double dy = std::abs(static_cast<double>(ey) - static_cast<double>(my));
        best = std::min(best, std::max(dx, dy));
      }
      r.assertions.push_back({1, "ds_peak_at_microphone", best <= 1.0, best, 1.0, where.str()});
    } else if (kind == BeamformerKind::mvdr) {
      r.assertions.push_back(
          {1, "mvdr_peak_far_from_source", distance(est, Vec3{}) > 0.9 * half_diagonal, distance(est, Vec3{}),
           0.9 * half_diagonal, where.str()});
    } else {
      r.assertions.push_back({1, name + "_peak_at_source", peak.index == source_cell,
                              distance(est, grid.point(source_cell)), 0.0, where.str()});
    }
  }
  r.seconds = seconds_since(t0);
  r.assertions.push_back(below(1, "runtime_s", r.seconds, 30.0));
  return r;
}

// --- 2 ---------------------------------------------------------------------

GoldenResult constant_noise_response() {
  const auto t0 = Clock::now();
  GoldenResult r{"constant_noise_response", {}, 0.0};
  Rng rng(202);
  const StftParams stft;
  const auto grid = coarse_grid();
  const FreeFieldModel model(square_array(), PropagationKind::near_field);
  const auto ncm = random_spectrum(stft.num_bins(), 4, rng);
  for (auto kind : {BeamformerKind::mvcnr, BeamformerKind::mpcnr}) {
    const SrpEngine engine(model, grid, stft, {kind, WeightingKind::none, {}, 0.0});
    const auto map = engine.compute(ncm, &ncm);
    r.assertions.push_back(below(2, std::string(to_string(kind)) + "_flatness", flatness(map), 1e-9));
  }
  r.seconds = seconds_since(t0);
  return r;
}

// --- 3 ---------------------------------------------------------------------

GoldenResult nmf_white_noise() {
  const auto t0 = Clock::now();
  GoldenResult r{"nmf_white_noise", {}, 0.0};
  Rng rng(303);
  const StftParams stft;
  const auto grid = coarse_grid();
  const FreeFieldModel model(square_array(), PropagationKind::near_field);
  const SrpEngine mvcnr(model, grid, stft, {BeamformerKind::mvcnr, WeightingKind::none, {}, 0.0});
  const SrpEngine nmf(model, grid, stft, {BeamformerKind::nmf, WeightingKind::none, {}, 0.0});
  const auto scm = random_spectrum(stft.num_bins(), 4, rng);
  for (double sigma_v2 : {1e-4, 1.0, 1e4}) {
    const std::vector<HermitianMatrix> ncm(stft.num_bins(), HermitianMatrix::identity(4) * sigma_v2);
    const double d = max_rel_diff(mvcnr.compute(scm, &ncm), nmf.compute(scm, &ncm));
    r.assertions.push_back(below(3, "max_rel_diff_sigma2_" + detail::format_number(sigma_v2), d, 1e-10));
  }
  r.seconds = seconds_since(t0);
  return r;
}

// --- 4 ---------------------------------------------------------------------

GoldenResult weighting_curves() {
  const auto t0 = Clock::now();
  GoldenResult r{"weighting_curves", {}, 0.0};
  constexpr std::size_t M = 6;
  Rng rng(404);
  const double sigma_v2 = 2.5;
  const auto h = random_vector(M, rng);
  const HermitianMatrix ncm = HermitianMatrix::identity(M) * sigma_v2;
  const HermitianMatrix ncm_inv = hermitian_inverse(ncm);
  std::vector<ComplexVector> candidates;
  for (int i = 0; i < 2000; ++i) candidates.push_back(random_vector(M, rng));

  auto scene = [&](double snr_db) {
    // Narrowband SNR = tr(Phi_xx) / tr(Phi_vv).
    const double snr = std::pow(10.0, snr_db / 10.0);
    const double sigma_x2 = snr * static_cast<double>(M) * sigma_v2 / squared_norm(h);
    return outer_product(h) * sigma_x2 + ncm;
  };
  // Largest map value over the true steering vector and random candidates.
  auto max_psd = [&](const HermitianMatrix& scm, double zeta2) {
    double best = mvcnr_psd(h, scm, ncm_inv) * zeta2;
    for (const auto& d : candidates) best = std::max(best, mvcnr_psd(d, scm, ncm_inv) * zeta2);
    return best;
  };

  for (double snr_db : {-20.0, 0.0, 20.0}) {
    const auto scm = scene(snr_db);
    const double expected = std::pow(10.0, snr_db / 10.0) + 1.0 / static_cast<double>(M);
    const double got = max_psd(scm, zeta2_snr(M));
    r.assertions.push_back(below(4, "snr_weighted_peak_" + detail::format_number(snr_db) + "dB",
                                 std::abs(got - expected) / expected, 1e-6,
                                 "peak " + detail::format_number(got) + " expected " + detail::format_number(expected)));
    const double flat = max_psd(scm, zeta2_flat(ncm_inv, scm));
    r.assertions.push_back(
        below(4, "flat_weighted_peak_" + detail::format_number(snr_db) + "dB", std::abs(flat - 1.0), 1e-9));
  }
  const auto ratio = [&](double snr_db) {
    const auto scm = scene(snr_db);
    return zeta2_frob(sigma_v2, scm) / zeta2_flat(ncm_inv, scm);
  };
  const double high = ratio(20.0);
  r.assertions.push_back(below(4, "frob_over_flat_20dB", std::abs(high - 1.0), 0.10,
                               "ratio " + detail::format_number(high)));
  const double low = ratio(-40.0);
  const double gap = 1.0 / std::sqrt(static_cast<double>(M));
  r.assertions.push_back(below(4, "frob_over_flat_-40dB", std::abs(low - gap) / gap, 0.02,
                               "ratio " + detail::format_number(low)));
  r.seconds = seconds_since(t0);
  return r;
}

// --- 5 ---------------------------------------------------------------------

GoldenResult max_response_inequality() {
  const auto t0 = Clock::now();
  GoldenResult r{"max_response_inequality", {}, 0.0};
  Rng rng(505);
  for (std::size_t m : {2, 6, 12}) {
    std::size_t failures = 0;
    for (int draw = 0; draw < 1000; ++draw) {
      const auto a = random_pd(m, rng);
      const auto hs = random_vector(m, rng);
      const std::vector<ComplexVector> cand{random_vector(m, rng)};
      if (!criterion1_check(a, hs, cand)) ++failures;
    }
    r.assertions.push_back(below(5, "violations_M" + std::to_string(m), static_cast<double>(failures), 0.5));
  }
  r.seconds = seconds_since(t0);
  r.assertions.push_back(below(5, "runtime_s", r.seconds, 5.0));
  return r;
}

// --- 6 ---------------------------------------------------------------------

GoldenResult model_scaling() {
  const auto t0 = Clock::now();
  GoldenResult r{"model_scaling", {}, 0.0};
  Rng rng(606);
  const StftParams stft;
  const auto grid = coarse_grid();
  auto base = std::make_shared<FreeFieldModel>(square_array(), PropagationKind::near_field);

  // Random complex factor per (bin, candidate), magnitudes spanning two decades.
  const double df = stft.sample_rate / static_cast<double>(stft.frame_size);
  std::vector<Complex> factors(stft.num_bins() * grid.size());
  std::uniform_real_distribution<double> mag(-1.0, 1.0), phase(-std::numbers::pi, std::numbers::pi);
  for (auto& f : factors) f = std::polar(std::pow(10.0, mag(rng)), phase(rng));
  const auto scaled = std::make_shared<ScaledModel>(base, [&factors, &grid, df](double freq, std::size_t p) {
    const auto k = static_cast<std::size_t>(std::llround(freq / df));
    return factors[k * grid.size() + p];
  });

  const auto scm = random_spectrum(stft.num_bins(), 4, rng);
  const auto ncm = random_spectrum(stft.num_bins(), 4, rng);
  for (auto kind : {BeamformerKind::mvcnr, BeamformerKind::nmf, BeamformerKind::mpcnr}) {
    const SrpOptions opt{kind, WeightingKind::none, {}, 0.01};
    const auto a = SrpEngine(*base, grid, stft, opt).compute(scm, &ncm);
    const auto b = SrpEngine(*scaled, grid, stft, opt).compute(scm, &ncm);
    r.assertions.push_back(below(6, std::string(to_string(kind)) + "_max_rel_diff", max_rel_diff(a, b), 1e-10));
  }
  r.seconds = seconds_since(t0);
  return r;
}

// --- 7 ---------------------------------------------------------------------

GoldenResult phat_frob() {
  const auto t0 = Clock::now();
  GoldenResult r{"phat_frob", {}, 0.0};
  Rng rng(707);
  const StftParams stft;
  const auto geom = uca_geometry(6, 0.05, false);
  const FreeFieldModel model(geom, PropagationKind::far_field);
  const auto grid = CandidateGrid::azimuth(1.0, geom.center(), 5.0);
  const double theta = 137.3 * std::numbers::pi / 180.0;
  const Vec3 source{100.0 * std::cos(theta), 100.0 * std::sin(theta), 0.0};

  // Plane wave synthesized directly in the STFT domain with unit-magnitude
  // source coefficients, so every SCM element has unit magnitude.
  const std::size_t frames = frame_count(static_cast<std::size_t>(3.0 * stft.sample_rate), stft);
  MultichannelStft tiles(stft, geom.size(), frames);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  std::vector<ComplexVector> steer(stft.num_bins());
  for (std::size_t k = 0; k < stft.num_bins(); ++k)
    steer[k] = steer_far_field(geom, source, bin_frequency(k, stft)).values;
  for (std::size_t l = 0; l < frames; ++l)
    for (std::size_t k = 0; k < stft.num_bins(); ++k) {
      const Complex s = std::polar(1.0, phase(rng));
      auto y = tiles.vector(l, k);
      for (std::size_t m = 0; m < geom.size(); ++m) y[m] = s * steer[k][m];
    }

  const SrpEngine phat(model, grid, stft, {BeamformerKind::ds, WeightingKind::phat, {}, 0.01});
  const SrpEngine frob(model, grid, stft, {BeamformerKind::nmf, WeightingKind::frob, {}, 0.01});
  RecursiveScm scm(stft.num_bins(), geom.size(), 0.2);
  std::size_t mismatches = 0;
  for (std::size_t l = 0; l < frames; ++l) {
    scm.update(tiles, l, phat.active_bins());
    if (argmax(phat.compute(scm.bins(), nullptr, l)).index != argmax(frob.compute(scm.bins(), nullptr, l)).index)
      ++mismatches;
  }
  r.assertions.push_back(below(7, "frames_with_different_argmax", static_cast<double>(mismatches), 0.5,
                               std::to_string(frames) + " frames"));
  r.seconds = seconds_since(t0);
  return r;
}

// --- 8 ---------------------------------------------------------------------

GoldenResult mpcnr_at_source() {
  const auto t0 = Clock::now();
  GoldenResult r{"mpcnr_at_source", {}, 0.0};
  Rng rng(808);
  std::uniform_real_distribution<double> logp(-3.0, 3.0);
  double worst = 0.0;
  for (std::size_t m : {2, 4, 6, 8}) {
    for (int draw = 0; draw < 250; ++draw) {
      const auto ncm = random_pd(m, rng);
      const auto h = random_vector(m, rng);
      const auto scm = outer_product(h) * std::pow(10.0, logp(rng)) + ncm;
      const auto ncm_inv = hermitian_inverse(ncm);
      const auto scm_inv = hermitian_inverse(scm);
      worst = std::max(worst, rel_diff(mpcnr_psd(h, scm_inv, ncm_inv, scm), mvcnr_psd(h, scm, ncm_inv)));
    }
  }
  r.assertions.push_back(below(8, "max_rel_diff", worst, 1e-8));
  r.seconds = seconds_since(t0);
  return r;
}

// --- 9 ---------------------------------------------------------------------

GoldenResult uca_cardioid() {
  const auto t0 = Clock::now();
  GoldenResult r{"uca_cardioid", {}, 0.0};
  Rng rng(909);
  std::uniform_real_distribution<double> az(0.0, 360.0);
  constexpr int kDoas = 20;

  struct Method {
    std::string name;
    BeamformerKind bf;
    WeightingKind w;
    double total = 0.0;
  };
  std::vector<Method> methods{{"mvcnr_frob", BeamformerKind::mvcnr, WeightingKind::frob},
                              {"srp_phat", BeamformerKind::ds, WeightingKind::phat},
                              {"csrp", BeamformerKind::ds, WeightingKind::none}};
  const RunConfig proto = uca_config(BeamformerKind::ds, WeightingKind::none, 0.0, 1);
  const auto grid = build_grid(proto);
  for (int i = 0; i < kDoas; ++i) {
    const double theta = az(rng);
    const auto seed = static_cast<std::uint64_t>(1000 + i);
    const auto input = make_input(uca_config(BeamformerKind::ds, WeightingKind::none, theta, seed));
    for (auto& m : methods) {
      const auto cfg = uca_config(m.bf, m.w, theta, seed);
      m.total += localize(cfg, *build_model(cfg), grid, input).mle;
    }
  }
  for (auto& m : methods) m.total /= kDoas;
  const double mvcnr = methods[0].total, phat = methods[1].total, csrp = methods[2].total;
  const std::string mles = "MLE deg: mvcnr_frob " + detail::format_number(mvcnr) + ", srp_phat " +
                           detail::format_number(phat) + ", csrp " + detail::format_number(csrp);
  r.assertions.push_back({9, "mvcnr_frob_not_worse_than_phat", mvcnr <= phat, mvcnr, phat, mles});
  r.assertions.push_back(at_least(9, "csrp_over_mvcnr_frob", csrp / std::max(mvcnr, 1e-300), 2.0, mles));
  r.seconds = seconds_since(t0);
  r.assertions.push_back(below(9, "runtime_s", r.seconds, 180.0));
  return r;
}

// --- 10 --------------------------------------------------------------------

GoldenResult determinism() {
  const auto t0 = Clock::now();
  GoldenResult r{"determinism", {}, 0.0};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("gsrp_determinism_" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
  std::filesystem::create_directories(dir);
  auto read_all = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::vector<std::pair<std::string, RunConfig>> runs{
      {"nearfield_mvcnr", nearfield_config(BeamformerKind::mvcnr)},
      {"uca_mvcnr_frob", uca_config(BeamformerKind::mvcnr, WeightingKind::frob, 63.0, 7)}};
  for (const auto& [name, cfg] : runs) {
    const auto a = dir / (name + "_a.csv");
    const auto b = dir / (name + "_b.csv");
    write_report_csv(localize_run(cfg), a);
    write_report_csv(localize_run(cfg), b);
    const auto ta = read_all(a), tb = read_all(b);
    r.assertions.push_back({10, name + "_identical_reports", !ta.empty() && ta == tb,
                            static_cast<double>(ta.size()), static_cast<double>(tb.size()), "bytes a vs b"});
  }
  std::filesystem::remove_all(dir);
  r.seconds = seconds_since(t0);
  return r;
}

// --- 11 --------------------------------------------------------------------

GoldenResult regularization_limit() {
  const auto t0 = Clock::now();
  GoldenResult r{"regularization_limit", {}, 0.0};
  Rng rng(1111);
  double worst = 1.0;
  for (std::size_t m : {2, 6, 12}) {
    for (int draw = 0; draw < 300; ++draw) {
      const auto scm = random_pd(m, rng);
      const double sigma_y2 = average_power(scm);
      auto ncm = random_pd(m, rng);
      ncm *= 1e-6 * sigma_y2 / average_power(ncm);
      const auto inv = hermitian_inverse(regularize_ncm(ncm, sigma_y2, 0.01));
      const auto d = random_vector(m, rng);
      const auto x = inv * std::span<const Complex>(d);
      const double cosine = std::abs(inner_product(d, x)) / std::sqrt(squared_norm(d) * squared_norm(x));
      worst = std::min(worst, cosine);
    }
  }
  r.assertions.push_back(at_least(11, "min_direction_cosine", worst, 0.999));
  r.seconds = seconds_since(t0);
  return r;
}

using Runner = std::function<GoldenResult()>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r{
      {"nearfield_failure", nearfield_failure},
      {"constant_noise_response", constant_noise_response},
      {"nmf_white_noise", nmf_white_noise},
      {"weighting_curves", weighting_curves},
      {"max_response_inequality", max_response_inequality},
      {"model_scaling", model_scaling},
      {"phat_frob", phat_frob},
      {"mpcnr_at_source", mpcnr_at_source},
      {"uca_cardioid", uca_cardioid},
      {"determinism", determinism},
      {"regularization_limit", regularization_limit},
  };
  return r;
}

}  // namespace

std::vector<std::string> golden_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

GoldenResult run_golden(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn();
  throw ConfigError("unknown golden scenario '" + name + "'");
}

std::string golden_summary_csv(const std::vector<GoldenResult>& results) {
  std::string out = "scenario,check,assertion,passed,value,limit\n";
  for (const auto& res : results)
    for (const auto& a : res.assertions)
      out += res.name + ',' + std::to_string(a.check) + ',' + a.name + ',' + (a.passed ? "1" : "0") + ',' +
             detail::format_number(a.value) + ',' + detail::format_number(a.limit) + '\n';
  return out;
}

RunConfig nearfield_config(BeamformerKind beamformer, double source_s) {
  RunConfig c;
  c.name = "nearfield";
  c.geometry = square_array();
  SceneSpec scene;
  scene.geometry = c.geometry;
  scene.source.position = {0.0, 0.0, 0.0};
  scene.noise.kind = NoiseKind::none;
  scene.noise_only_s = 0.0;
  scene.source_s = source_s;
  scene.seed = 11;
  c.scene = scene;
  c.model.kind = ModelKind::near_field;
  c.beamformer = beamformer;
  c.weighting = WeightingKind::none;
  c.grid.kind = GridKind::planar;
  c.grid.x_min = c.grid.y_min = -3.0;
  c.grid.x_max = c.grid.y_max = 3.0;
  c.grid.spacing = 0.05;
  c.noise_segment_s = 0.0;
  c.ncm_source = NcmSource::identity;
  return c;
}

RunConfig uca_config(BeamformerKind beamformer, WeightingKind weighting, double azimuth_deg, std::uint64_t seed,
                     double snr_db) {
  RunConfig c;
  c.name = "uca_cardioid";
  c.geometry = uca_geometry(5, 0.025, true);
  SceneSpec scene;
  scene.geometry = c.geometry;
  const double a = azimuth_deg * std::numbers::pi / 180.0;
  scene.source.position = {2.0 * std::cos(a), 2.0 * std::sin(a), 0.0};
  scene.source.rolloff_hz = 500.0;
  scene.cardioid_mics = true;
  scene.noise.kind = NoiseKind::shaped;
  scene.noise.field = pink_tilt(diffuse_noise_field(c.geometry, 128, 0.01, true, true), 100.0);
  scene.noise.snr_db = snr_db;
  scene.noise_only_s = 3.0;
  scene.source_s = 3.0;
  scene.seed = seed;
  c.scene = scene;
  c.model.kind = ModelKind::far_field;
  // The DS baselines keep the omnidirectional far-field model.
  c.model.directivity = beamformer != BeamformerKind::ds;
  c.beamformer = beamformer;
  c.weighting = weighting;
  c.grid.kind = GridKind::azimuth;
  c.grid.spacing = 5.0;
  c.noise_segment_s = 3.0;
  return c;
}

}  // namespace gsrp
