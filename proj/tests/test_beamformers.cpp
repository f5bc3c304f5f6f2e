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

#include "gsrp/beamformers.hpp"
#include "gsrp/covariance.hpp"
#include "test_util.hpp"

using namespace gsrp;
using namespace gsrp::test;

TEST_SUITE("beamformers") {
  TEST_CASE("output PSDs of the fixed statistics match the reference") {
    const auto scm = fixed_scm(), ncm = fixed_ncm();
    const auto d = fixed_steering();
    const auto ncm_inv = hermitian_inverse(ncm), scm_inv = hermitian_inverse(scm);
    const double sv2 = average_power(ncm);
    CHECK(ds_psd(d, scm) == doctest::Approx(15.918700000000001).epsilon(1e-13));
    CHECK(mvdr_psd(d, scm, ncm_inv) == doctest::Approx(4.503668445093755).epsilon(1e-12));
    CHECK(mpdr_psd(d, scm, scm_inv) == doctest::Approx(4.3155050821317342).epsilon(1e-12));
    CHECK(mvcnr_psd(d, scm, ncm_inv) == doctest::Approx(4.8933084965209632).epsilon(1e-12));
    CHECK(nmf_psd(d, scm, sv2) == doctest::Approx(5.4628345916266303).epsilon(1e-12));
    CHECK(mpcnr_psd(d, scm_inv, ncm_inv, scm) == doctest::Approx(4.6888659639630728).epsilon(1e-12));
  }

  TEST_CASE("closed forms equal the power of the explicit weights") {
    Rng rng(20);
    for (int i = 0; i < 50; ++i) {
      const auto ncm = random_pd(5, rng);
      const auto scm = random_pd(5, rng);
      const auto d = random_vector(5, rng);
      const auto ncm_inv = hermitian_inverse(ncm), scm_inv = hermitian_inverse(scm);
      const double zeta = 0.7;
      CHECK(output_power(mvcnr_weights(d, ncm_inv, zeta), scm) ==
            doctest::Approx(mvcnr_psd(d, scm, ncm_inv, zeta)).epsilon(1e-10));
      CHECK(output_power(mpcnr_weights(d, scm_inv, ncm_inv, zeta), scm) ==
            doctest::Approx(mpcnr_psd(d, scm_inv, ncm_inv, scm, zeta)).epsilon(1e-10));
      CHECK(output_power(nmf_weights(d, 2.0, zeta), scm) == doctest::Approx(nmf_psd(d, scm, 2.0, zeta)).epsilon(1e-10));
      CHECK(output_power(mvdr_weights(d, ncm_inv), scm) == doctest::Approx(mvdr_psd(d, scm, ncm_inv)).epsilon(1e-10));
    }
  }

  TEST_CASE("constant noise response and source response") {
    Rng rng(21);
    const auto ncm = random_pd(4, rng);
    const auto ncm_inv = hermitian_inverse(ncm);
    const double zeta = 1.3;
    for (int i = 0; i < 20; ++i) {
      const auto d = random_vector(4, rng);
      const auto w = mvcnr_weights(d, ncm_inv, zeta);
      CHECK(output_power(w, ncm) == doctest::Approx(zeta * zeta).epsilon(1e-12));
      CHECK(std::abs(inner_product(w, d)) ==
            doctest::Approx(zeta * std::sqrt(hermitian_form(d, ncm_inv))).epsilon(1e-12));
    }
  }

  TEST_CASE("MVDR is distortionless") {
    Rng rng(22);
    const auto ncm_inv = hermitian_inverse(random_pd(3, rng));
    const auto d = random_vector(3, rng);
    const Complex r = inner_product(mvdr_weights(d, ncm_inv), d);
    CHECK(std::abs(r - Complex(1.0, 0.0)) < 1e-12);
  }

  TEST_CASE("BinBeamformer matches the free functions") {
    Rng rng(23);
    const auto scm = random_pd(4, rng), ncm = random_pd(4, rng);
    const auto scm_inv = hermitian_inverse(scm), ncm_inv = hermitian_inverse(ncm);
    const BinBeamformer::Inputs in{&scm, &ncm_inv, &scm_inv, 0.8};
    const auto d = random_vector(4, rng);
    CHECK(BinBeamformer(BeamformerKind::ds, in).unit_psd(d) == doctest::Approx(ds_psd(d, scm)).epsilon(1e-12));
    CHECK(BinBeamformer(BeamformerKind::mvdr, in).unit_psd(d) ==
          doctest::Approx(mvdr_psd(d, scm, ncm_inv)).epsilon(1e-12));
    CHECK(BinBeamformer(BeamformerKind::mpdr, in).unit_psd(d) ==
          doctest::Approx(mpdr_psd(d, scm, scm_inv)).epsilon(1e-12));
    CHECK(BinBeamformer(BeamformerKind::mvcnr, in).unit_psd(d) ==
          doctest::Approx(mvcnr_psd(d, scm, ncm_inv)).epsilon(1e-12));
    CHECK(BinBeamformer(BeamformerKind::nmf, in).unit_psd(d) == doctest::Approx(nmf_psd(d, scm, 0.8)).epsilon(1e-12));
    CHECK(BinBeamformer(BeamformerKind::mpcnr, in).unit_psd(d) ==
          doctest::Approx(mpcnr_psd(d, scm_inv, ncm_inv, scm)).epsilon(1e-12));
  }

  TEST_CASE("missing inputs and degenerate steering") {
    const auto scm = fixed_scm();
    CHECK_THROWS(BinBeamformer(BeamformerKind::mvcnr, {&scm, nullptr, nullptr, 1.0}));
    const auto ncm_inv = hermitian_inverse(fixed_ncm());
    const ComplexVector zero(3);
    CHECK_THROWS_AS(mvcnr_psd(zero, scm, ncm_inv), DegenerateSteering);
  }

  TEST_CASE("maximum source response check") {
    Rng rng(24);
    const auto a = random_pd(3, rng);
    const auto hs = random_vector(3, rng);
    std::vector<ComplexVector> cands{random_vector(3, rng), hs};
    CHECK(criterion1_check(a, hs, cands));
  }

  TEST_CASE("names round-trip") {
    for (auto k : {BeamformerKind::ds, BeamformerKind::mvdr, BeamformerKind::mpdr, BeamformerKind::mvcnr,
                   BeamformerKind::nmf, BeamformerKind::mpcnr})
      CHECK(parse_beamformer(to_string(k)) == k);
    CHECK_THROWS_AS(parse_beamformer("lcmv"), ConfigError);
    CHECK_FALSE(needs_noise_covariance(BeamformerKind::nmf));
    CHECK(needs_scm_inverse(BeamformerKind::mpcnr));
  }
}
