// Copyright 2026 The bicartan Authors
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

#include "doctest.h"

#include <cmath>
#include <numbers>

#include "bicartan/bdi_decomposition.hpp"
#include "bicartan/error.hpp"
#include "bicartan/linalg.hpp"
#include "oracles.hpp"
#include "swap_fixtures.hpp"

using namespace bicartan;

namespace {

void check_kak(const Matrix& x, const BlockKAK& kak) {
  CHECK(frobenius_distance(kak.left() * kak.torus() * kak.right(), x) < 1e-10);
  for (const Matrix* k : {&kak.K11, &kak.K12, &kak.K21, &kak.K22}) {
    CHECK(k->is_orthogonal(1e-12));
    CHECK(determinant_real(*k) == doctest::Approx(1.0));
  }
  CHECK(frobenius_distance(oracle::expm(kak.torus_generator()), kak.torus()) < 1e-11);
}

}  // namespace

TEST_CASE("BDI on random special orthogonal matrices") {
  const std::pair<std::size_t, std::size_t> sizes[] = {{2, 2}, {3, 2}, {4, 4}, {5, 3}, {2, 1}, {1, 1}, {6, 2}};
  for (auto [r, q] : sizes) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Matrix x = random_special_orthogonal(r + q, 31 * seed + r);
      check_kak(x, bdi_decompose(x, r, q));
    }
  }
}

TEST_CASE("BDI on structured inputs") {
  check_kak(Matrix::identity(6), bdi_decompose(Matrix::identity(6), 3, 3));
  const Matrix swapped = fixture::x_sw_tilde().to_matrix();
  const BlockKAK kak = bdi_decompose(swapped, 4, 4);
  check_kak(swapped, kak);
  // Block-diagonal input: the torus is trivial.
  const Matrix bd = direct_sum(random_special_orthogonal(3, 1), random_special_orthogonal(2, 2));
  const BlockKAK t = bdi_decompose(bd, 3, 2);
  check_kak(bd, t);
  for (double a : t.angles) CHECK(std::abs(std::sin(a)) < 1e-12);
}

TEST_CASE("BDI rejects rectangular and improper splits") {
  CHECK_THROWS_AS(bdi_decompose(Matrix::identity(4), 1, 3), Error);
  CHECK_THROWS_AS(bdi_decompose(Matrix::identity(4), 3, 2), Error);
}

TEST_CASE("reference integer factors of the rotated SWAP") {
  using namespace fixture;
  const auto k1 = oracle::block_diag({k11(), k12()});
  const auto k2 = oracle::block_diag({k21(), k22()});
  CHECK(k1 * a_prime_tilde() * k2 == x_sw_tilde());
}

TEST_CASE("plane_pair orientation") {
  const Matrix d = delta(4, 3, 1) * Complex(2.0);
  const PlanePair p = plane_pair(d, 2);
  CHECK(p.t == 0);
  CHECK(p.u == 2);
  CHECK(p.v == doctest::Approx(-2.0));
  CHECK_THROWS_AS(plane_pair(delta(4, 1, 2), 2), Error);
  CHECK_THROWS_AS(plane_pair(Matrix::zeros(4, 4), 2), Error);
}

TEST_CASE("align_torus maps planes onto targets") {
  const Matrix x = random_special_orthogonal(5, 77);
  const BlockKAK kak = bdi_decompose(x, 3, 2);
  const std::vector<PlanePair> targets{{2, 3, 1.0}, {0, 4, -1.0}};
  const AlignedTorus at = align_torus(kak, targets);
  CHECK(frobenius_distance(at.K1 * at.A * at.K2, x) < 1e-10);
  Matrix gen = Matrix::zeros(5, 5);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& p = targets[i];
    gen(p.t, p.u) += p.v * at.coefficients[i];
    gen(p.u, p.t) -= p.v * at.coefficients[i];
  }
  CHECK(frobenius_distance(oracle::expm(gen), at.A) < 1e-11);
  CHECK(determinant_real(at.K1) == doctest::Approx(1.0));
  CHECK(determinant_real(at.K2) == doctest::Approx(1.0));
}
