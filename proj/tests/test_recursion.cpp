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

#include "bicartan/error.hpp"
#include "bicartan/io.hpp"
#include "bicartan/linalg.hpp"
#include "bicartan/recursion.hpp"
#include "oracles.hpp"

using namespace bicartan;

namespace {

void check_tree(const FactorTree& tree, double tol) {
  CHECK(tree.residual() <= tol);
  for (const Factor* f : tree.leaves()) {
    CHECK(f->matrix.is_unitary(1e-10));
    if (!f->generator.empty()) CHECK(frobenius_distance(oracle::expm(f->generator), f->matrix) < 1e-9);
  }
}

}  // namespace

TEST_CASE("split choice") {
  CHECK(choose_split(4) == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(choose_split(5) == std::pair<std::size_t, std::size_t>{3, 2});
  CHECK_THROWS_AS(choose_split(1), Error);
  const SplitStrategy s{{SplitPlan{1, 1, 2, 2}}};
  CHECK(plan_for({2, 4}, 0, s) == SplitPlan{1, 1, 2, 2});
  CHECK(plan_for({2, 4}, 1, s) == SplitPlan{1, 1, 2, 2});
  CHECK(plan_for({3, 4}, 0, s) == SplitPlan{2, 1, 2, 2});
  CHECK(s.name() == "explicit:1,1,2,2");
  CHECK(SplitStrategy{}.name() == "balanced");
}

TEST_CASE("so(4) splits into commuting factors") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix k = random_special_orthogonal(4, seed);
    const auto [a, b] = so4_split(k);
    CHECK(frobenius_distance(a * b, k) < 1e-12);
    CHECK(commutator(a, b).max_abs() < 1e-12);
  }
}

TEST_CASE("Euler factors on so(3) rotations") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Matrix k = random_special_orthogonal(3, seed);
    const EulerFactors e = euler_rotation3(k);
    CHECK(frobenius_distance(e.L1 * e.N * e.L2, k) < 1e-12);
    const oracle::Euler3 ref = oracle::euler3(k);
    CHECK(e.beta == doctest::Approx(ref.b).epsilon(1e-10));
  }
}

TEST_CASE("recursive decomposition on assorted shapes") {
  const BipartiteShape shapes[] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {3, 4}};
  for (BipartiteShape shape : shapes) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Matrix x = random_unitary(shape.dimension(), 500 + seed);
      const FactorTree tree = recursive_decompose(x, shape);
      check_tree(tree, 1e-9);
    }
  }
}

TEST_CASE("SWAP tree") {
  const FactorTree tree = recursive_decompose(gen_swap(), {2, 4}, SplitStrategy{{SplitPlan{1, 1, 2, 2}}});
  CHECK(tree.residual() == 0.0);
  REQUIRE(tree.factors.size() == 3);
  CHECK(tree.factors[0].parts.size() == 7);
  CHECK(tree.factors[0].level == 0);
}

TEST_CASE("local products take the local path") {
  const Matrix u = kron(random_unitary(2, 1), random_unitary(3, 2));
  const auto split = split_product(u, {2, 3});
  REQUIRE(split.has_value());
  CHECK(frobenius_distance(kron(split->first, split->second), u) < 1e-12);
  CHECK_FALSE(split_product(random_unitary(6, 3), {2, 3}).has_value());
  const FactorTree tree = recursive_decompose(u, {2, 3});
  check_tree(tree, 1e-9);
}

TEST_CASE("identity input") {
  const FactorTree tree = recursive_decompose(Matrix::identity(6), {3, 2});
  CHECK(tree.residual() == 0.0);
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(recursive_decompose(Matrix::identity(4), {2, 3}), Error);
}

TEST_CASE("1x1 input") {
  const FactorTree tree = recursive_decompose(Matrix::identity(1), {1, 1});
  CHECK(tree.residual() == 0.0);
}
