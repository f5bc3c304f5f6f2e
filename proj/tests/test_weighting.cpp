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

#include <doctest.h>

#include "gsrp/covariance.hpp"
#include "gsrp/weighting.hpp"
#include "test_util.hpp"

using namespace gsrp;
using namespace gsrp::test;

TEST_SUITE("weighting") {
  TEST_CASE("flat and frob weights of the fixed statistics match the reference") {
    const auto scm = fixed_scm(), ncm = fixed_ncm();
    CHECK(zeta2_flat(hermitian_inverse(ncm), scm) == doctest::Approx(0.2020720463834236).epsilon(1e-12));
    CHECK(zeta2_frob(average_power(ncm), scm) == doctest::Approx(0.17666440383327528).epsilon(1e-12));
    CHECK(zeta2_snr(6) == doctest::Approx(1.0 / 6.0));
  }

  TEST_CASE("flat denominator is clamped at one") {
    const auto ncm = HermitianMatrix::identity(3);
    CHECK(zeta2_flat(ncm, ncm * 0.5) == 1.0);
  }

  TEST_CASE("PHAT normalizes every element to unit magnitude") {
    Rng rng(30);
    const auto p = phat_transform(random_pd(4, rng));
    for (const auto& e : p.entries()) CHECK(std::abs(e) == doctest::Approx(1.0));
    const auto z = phat_transform(HermitianMatrix(2));
    for (const auto& e : z.entries()) CHECK(e == Complex{});
  }

  TEST_CASE("band mask is inclusive at both ends") {
    const std::vector<double> f{50.0, 100.0, 4000.0, 8000.0};
    const auto m = band_mask(f, {100.0, 4000.0});
    CHECK(m == std::vector<double>{0.0, 1.0, 1.0, 0.0});
    CHECK_THROWS_AS(FrequencyBand({500.0, 100.0}).validate(8000.0), ConfigError);
    CHECK_THROWS_AS(FrequencyBand({100.0, 9000.0}).validate(8000.0), ConfigError);
  }

  TEST_CASE("names round-trip") {
    for (auto k : {WeightingKind::none, WeightingKind::phat, WeightingKind::snr, WeightingKind::flat,
                   WeightingKind::frob})
      CHECK(parse_weighting(to_string(k)) == k);
    CHECK_THROWS_AS(parse_weighting("scot"), ConfigError);
    CHECK(weighting_needs_noise_covariance(WeightingKind::flat));
    CHECK_FALSE(weighting_needs_noise_covariance(WeightingKind::frob));
  }
}
