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

// gsrp command-line tool: simulate, localize, eval, selftest.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gsrp/pipeline.hpp"
#include "gsrp/scenarios.hpp"
#include "gsrp/wav.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kNumericalError = 3;

void apply_thread_env() {
#ifdef _OPENMP
  if (const char* env = std::getenv("GSRP_THREADS")) {
    const int n = std::atoi(env);
    if (n <= 0) throw gsrp::ConfigError("GSRP_THREADS must be a positive integer");
    omp_set_num_threads(n);
  }
#endif
}

gsrp::RunConfig load(const std::string& path, const std::optional<std::uint64_t>& seed) {
  auto cfg = gsrp::Config::load(path);
  if (seed) cfg.set("scene.seed", std::to_string(*seed));
  return gsrp::parse_run_config(cfg);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gsrp::ConfigError("cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized steered response power sound source localization"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "Override the scene seed");

  std::string config_path, output;
  auto* simulate = app.add_subcommand("simulate", "Render the configured scene to a WAV file");
  simulate->add_option("config", config_path, "Run configuration")->required();
  simulate->add_option("-o,--output", output, "Output WAV")->required();

  std::string heatmap;
  bool avg_heatmap = false, raw_heatmap = false;
  auto* localize = app.add_subcommand("localize", "Localize the configured input and write a per-frame report");
  localize->add_option("config", config_path, "Run configuration")->required();
  localize->add_option("-o,--output", output, "Report CSV")->required();
  localize->add_option("--heatmap", heatmap, "Write the last active frame's map");
  localize->add_flag("--avg-heatmap", avg_heatmap, "Write the map averaged over active frames instead");
  localize->add_flag("--raw-heatmap", raw_heatmap, "Do not normalize the heatmap to a maximum of one");

  std::string config_dir;
  auto* eval = app.add_subcommand("eval", "Run the SNR/seed sweeps of every .cfg file in a directory");
  eval->add_option("config-dir", config_dir, "Directory of run configurations")->required();
  eval->add_option("-o,--output", output, "Summary CSV")->required();

  std::vector<std::string> names;
  auto* selftest = app.add_subcommand("selftest", "Run the built-in golden scenarios");
  selftest->add_option("names", names, "Scenario names (default: all)");
  selftest->add_option("-o,--output", output, "Summary CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_thread_env();
    if (*simulate) {
      const auto rc = load(config_path, seed);
      if (!rc.scene) throw gsrp::ConfigError("simulate needs scene.* keys");
      const auto scene = gsrp::simulate(*rc.scene);
      gsrp::write_wav(scene.samples, output);
      std::printf("snr_db_average=%.9g snr_db_closest=%.9g\n", scene.snr_db_average, scene.snr_db_closest);
    } else if (*localize) {
      const auto rc = load(config_path, seed);
      const auto report = gsrp::localize_run(rc);
      gsrp::write_report_csv(report, output);
      if (!heatmap.empty()) {
        const auto& map = avg_heatmap ? report.average_map : report.last_map;
        if (map.values.empty()) throw gsrp::NumericalError("no active frame, no heatmap to write");
        gsrp::export_heatmap(map, gsrp::build_grid(rc), heatmap, !raw_heatmap);
      }
      std::printf("frames=%zu mle=%.9g q25=%.9g q75=%.9g\n", report.frames_evaluated, report.mle, report.q25,
                  report.q75);
    } else if (*eval) {
      if (seed) throw gsrp::ConfigError("--seed is not supported by eval; set scene.seed in each config");
      write_text(output, gsrp::eval_csv(gsrp::evaluate_dir(config_dir)));
    } else if (*selftest) {
      if (names.empty()) names = gsrp::golden_names();
      std::vector<gsrp::GoldenResult> results;
      bool ok = true;
      for (const auto& n : names) {
        results.push_back(gsrp::run_golden(n));
        const auto& r = results.back();
        for (const auto& a : r.assertions)
          std::printf("%s  [%d] %s/%s value=%.9g limit=%.9g %s\n", a.passed ? "PASS" : "FAIL", a.check,
                      r.name.c_str(), a.name.c_str(), a.value, a.limit, a.detail.c_str());
        ok = ok && r.passed();
      }
      if (!output.empty()) write_text(output, gsrp::golden_summary_csv(results));
      return ok ? 0 : 1;
    }
  } catch (const gsrp::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigError;
  } catch (const gsrp::DimensionMismatch& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigError;
  } catch (const gsrp::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return kNumericalError;
  }
  return 0;
}
