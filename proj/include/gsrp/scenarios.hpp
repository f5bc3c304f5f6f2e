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

#pragma once

// Built-in golden scenarios. Each one runs seeded, deterministic
// configurations and evaluates exact predicates tagged with a check number.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gsrp/config.hpp"

namespace gsrp {

struct Assertion {
  int check = 0;
  std::string name;
  bool passed = false;
  double value = 0.0;  // measured quantity
  double limit = 0.0;  // threshold it was compared against
  std::string detail;
};

struct GoldenResult {
  std::string name;
  std::vector<Assertion> assertions;
  double seconds = 0.0;

  bool passed() const;
};

// Registered names, in check order.
std::vector<std::string> golden_names();

// Throws ConfigError for an unknown name.
GoldenResult run_golden(const std::string& name);

std::string golden_summary_csv(const std::vector<GoldenResult>& results);

// Four omni mics on the corners of a 2 m square, white source at the center,
// no noise, near-field model over a 5 cm planar grid spanning [-3, 3] m.
RunConfig nearfield_config(BeamformerKind beamformer, double source_s = 0.15);

// Five outward-facing cardioid mics on a 5 cm diameter circle, source at
// azimuth_deg and 2 m distance, speech-like spectrum, pink isotropic noise at
// snr_db, 5 degree azimuth grid. DS runs use the omnidirectional far-field model, all other
// beamformers add the cardioid directivities.
RunConfig uca_config(BeamformerKind beamformer, WeightingKind weighting, double azimuth_deg,
                     std::uint64_t seed, double snr_db = 0.0);

}  // namespace gsrp
