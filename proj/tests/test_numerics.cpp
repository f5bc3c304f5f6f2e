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

#include "gsrp/numerics.hpp"
#include "test_util.hpp"

using namespace gsrp;
using namespace gsrp::test;

TEST_SUITE("numerics") {
  TEST_CASE("set mirrors the conjugate and keeps the diagonal real") {
    HermitianMatrix a(2);
    a.set(0, 1, {1.0, 2.0});
    a.set(1, 1, {3.0, 5.0});
    CHECK(a(1, 0) == Complex(1.0, -2.0));
    CHECK(a(1, 1) == Complex(3.0, 0.0));
  }

  TEST_CASE("cholesky and inverse of the fixed NCM") {
    const auto l = cholesky(fixed_ncm());
    CHECK(l(0, 0).real() == doctest::Approx(1.4142135623730951).epsilon(1e-14));
    CHECK(l(1, 1).real() == doctest::Approx(1.1726039399558574).epsilon(1e-14));
    CHECK(l(2, 2).real() == doctest::Approx(1.0768641342510965).epsilon(1e-14));
    const auto inv = hermitian_inverse(fixed_ncm());
    CHECK(inv(0, 0).real() == doctest::Approx(0.55189714644089061).epsilon(1e-14));
    CHECK(inv(0, 1).real() == doctest::Approx(-0.11288805268109124).epsilon(1e-13));
    CHECK(inv(0, 1).imag() == doctest::Approx(-0.15678896205707119).epsilon(1e-13));
    CHECK(inv(0, 2).real() == doctest::Approx(0.018814675446848547).epsilon(1e-12));
    CHECK(inv(0, 2).imag() == doctest::Approx(0.072122922546252757).epsilon(1e-13));
  }

  TEST_CASE("inverse agrees with an Eigen LU solve") {
    Rng rng(1);
    for (std::size_t m : {1, 2, 5, 12}) {
      const auto a = random_pd(m, rng);
      const Eigen::MatrixXcd ref = to_eigen(a).inverse();
      const auto inv = hermitian_inverse(a);
      CHECK((to_eigen(inv) - ref).norm() / ref.norm() < 1e-12);
    }
  }

  TEST_CASE("cholesky rejects indefinite matrices") {
    HermitianMatrix a = HermitianMatrix::identity(3);
    a.set(2, 2, -1.0);
    CHECK_THROWS_AS(cholesky(a), NotPositiveDefinite);
    try {
      cholesky(a);
    } catch (const NotPositiveDefinite& e) {
      CHECK(e.pivot() == 2);
    }
    CHECK_THROWS_AS(hermitian_inverse(HermitianMatrix(2)), NumericalError);
  }

  TEST_CASE("forms and products agree with Eigen") {
    Rng rng(2);
    const auto a = random_pd(6, rng);
    const auto b = random_pd(6, rng);
    const auto x = random_vector(6, rng);
    const auto y = random_vector(6, rng);
    const auto ea = to_eigen(a), eb = to_eigen(b);
    const auto ex = to_eigen(x), ey = to_eigen(y);
    const Complex q = quadratic_form(x, a, y);
    const Complex eq = ex.dot(ea * ey);  // Eigen dot conjugates the first argument
    CHECK(std::abs(q - eq) < 1e-10 * std::abs(eq));
    CHECK(hermitian_form(x, a) == doctest::Approx(ex.dot(ea * ex).real()).epsilon(1e-12));
    CHECK((to_eigen(sandwich(a, b)) - ea * eb * ea).norm() < 1e-10 * (ea * eb * ea).norm());
    CHECK(trace_of_product(a, b) == doctest::Approx((ea * eb).trace().real()).epsilon(1e-12));
    CHECK(frobenius_norm(a) == doctest::Approx(ea.norm()).epsilon(1e-13));
    CHECK(trace(a) == doctest::Approx(ea.trace().real()).epsilon(1e-13));
    CHECK(squared_norm(x) == doctest::Approx(ex.squaredNorm()).epsilon(1e-13));
    CHECK(std::abs(inner_product(x, y) - ex.dot(ey)) < 1e-12);
  }

  TEST_CASE("hermitian form of a PD matrix is positive for random vectors") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      const auto a = random_pd(4, rng);
      CHECK(hermitian_form(random_vector(4, rng), a) > 0.0);
    }
  }

  TEST_CASE("dimension mismatches throw") {
    const HermitianMatrix a = HermitianMatrix::identity(3);
    const ComplexVector v(2);
    CHECK_THROWS_AS(hermitian_form(v, a), DimensionMismatch);
    CHECK_THROWS_AS(a + HermitianMatrix::identity(2), DimensionMismatch);
  }
}
