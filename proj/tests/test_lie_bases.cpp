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

#include "bicartan/error.hpp"
#include "bicartan/lie_bases.hpp"
#include "oracles.hpp"

using namespace bicartan;

namespace {

double bracket_residual(const SubspaceBasis& x, const SubspaceBasis& y, const SubspaceBasis& target) {
  double worst = 0.0;
  for (const auto& a : x.elements)
    for (const auto& b : y.elements) worst = std::max(worst, projection_residual(commutator(a, b), target));
  return worst;
}

SubspaceBasis merged(const SubspaceBasis& a, const SubspaceBasis& b) {
  SubspaceBasis out = a;
  out.elements.insert(out.elements.end(), b.elements.begin(), b.elements.end());
  out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
  return out;
}

}  // namespace

TEST_CASE("elementary builders") {
  const Matrix d = delta(3, 1, 3);
  CHECK(d(0, 2) == Complex(1.0));
  CHECK(d(2, 0) == Complex(-1.0));
  const Matrix o = omega(3, 2, 3);
  CHECK(o(1, 2) == Complex(1.0));
  CHECK(o(2, 1) == Complex(1.0));
  CHECK_THROWS_AS(delta(3, 0, 1), Error);
  CHECK_THROWS_AS(elementary(2, 1, 3), Error);
}

TEST_CASE("bipartite spans have the expected sizes and are orthogonal") {
  const BipartiteSpans s = bipartite_spans({2, 4});
  CHECK(s.k.size() == 28);
  CHECK(s.p.size() == 36);
  CHECK(s.a.size() == 8);
  std::vector<Matrix> all = s.k.elements;
  all.insert(all.end(), s.p.elements.begin(), s.p.elements.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(std::abs(trace_inner(all[i], all[j])) < 1e-14);
}

TEST_CASE("k closes and [k, p] lands in p") {
  for (BipartiteShape shape : {BipartiteShape{2, 2}, BipartiteShape{2, 3}, BipartiteShape{3, 3}}) {
    const BipartiteSpans s = bipartite_spans(shape);
    CHECK(bracket_residual(s.k, s.k, s.k) < 1e-12);
    CHECK(bracket_residual(s.k, s.p, s.p) < 1e-12);
    CHECK(bracket_residual(s.p, s.p, s.k) < 1e-12);
    CHECK(bracket_residual(s.a, s.a, s.k) < 1e-14);
  }
}

TEST_CASE("split validation") {
  CHECK_NOTHROW((SplitPlan{1, 1, 2, 2}.validate()));
  CHECK_THROWS_AS((SplitPlan{1, 2, 2, 2}.validate()), Error);
  CHECK_THROWS_AS((SplitPlan{1, 0, 1, 0}.validate()), Error);
  CHECK(to_string(SplitPlan{1, 1, 2, 2}) == "1,1,2,2");
}

TEST_CASE("conjugacy order for the 2x4 split") {
  const auto order = conjugacy_order({1, 1, 2, 2});
  CHECK(order == std::vector<std::size_t>{0, 1, 6, 7, 2, 3, 4, 5});
  const Matrix r = conjugacy_R({1, 1, 2, 2});
  CHECK(r.is_orthogonal(0.0));
}

TEST_CASE("conjugacy_R block-diagonalizes k prime") {
  for (SplitPlan split : {SplitPlan{1, 1, 2, 2}, SplitPlan{2, 1, 2, 1}, SplitPlan{2, 1, 1, 1}}) {
    const BipartiteShape shape = split.shape();
    const PrimeSpans ps = prime_spans(shape, split);
    const Matrix r = conjugacy_R(split);
    const std::size_t rr = split.r();
    for (const auto& k : ps.k.elements) {
      const Matrix t = r * k * r.transpose();
      double off = 0.0;
      for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
          if ((i < rr) != (j < rr)) off += std::abs(t(i, j));
      CHECK(off == 0.0);
    }
  }
}

TEST_CASE("prime spans reject 2x2") {
  CHECK_THROWS_AS(prime_spans({2, 2}, {1, 1, 1, 1}), Error);
}

TEST_CASE("Cartan subalgebras are abelian and sit inside p prime") {
  for (SplitPlan split : {SplitPlan{1, 1, 2, 2}, SplitPlan{2, 1, 2, 1}, SplitPlan{2, 2, 2, 1}}) {
    const BipartiteShape shape = split.shape();
    const SubspaceBasis ap = cartan_a_prime(split);
    const SubspaceBasis app = cartan_a_dprime(split);
    CHECK(ap.size() == split.r1 * split.q2 + split.q1 * split.r2);
    CHECK(app.size() == split.q1 * split.q2 + std::min(split.r1 * split.q2, split.q1 * split.r2));
    const PrimeSpans prime = prime_spans(shape, split);
    const PrimeSpans dprime = double_prime_spans(shape, split);
    for (const auto& a : ap.elements) CHECK(projection_residual(a, prime.p) < 1e-12);
    for (const auto& a : app.elements) CHECK(projection_residual(a, dprime.p) < 1e-12);
    CHECK(bracket_residual(ap, ap, ap) == 0.0);
    CHECK(bracket_residual(app, app, app) == 0.0);
  }
}

TEST_CASE("p prime and k prime brackets") {
  const BipartiteShape shape{2, 4};
  const SplitPlan split{1, 1, 2, 2};
  const PrimeSpans ps = prime_spans(shape, split);
  CHECK(ps.k.size() == 12);
  CHECK(ps.p.size() == 16);
  CHECK(bracket_residual(ps.k, ps.k, ps.k) < 1e-12);
  CHECK(bracket_residual(ps.k, ps.p, ps.p) < 1e-12);
  CHECK(bracket_residual(ps.p, ps.p, ps.k) < 1e-12);
  const PrimeSpans dp = double_prime_spans(shape, split);
  CHECK(dp.k.size() == 4);
  CHECK(dp.p.size() == 8);
  CHECK(bracket_residual(dp.k, dp.k, dp.k) < 1e-12);
  CHECK(bracket_residual(dp.k, dp.p, dp.p) < 1e-12);
  CHECK(bracket_residual(dp.p, dp.p, dp.k) < 1e-12);
  CHECK(bracket_residual(merged(dp.k, dp.p), merged(dp.k, dp.p), ps.k) < 1e-12);
}

TEST_CASE("projection coefficients recover a combination") {
  const SubspaceBasis a = cartan_a_prime({1, 1, 2, 2});
  Matrix m = Matrix::zeros(8, 8);
  for (std::size_t i = 0; i < a.size(); ++i) m += a.elements[i] * Complex(0.5 + static_cast<double>(i));
  const auto c = project_coefficients(m, a);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(c[i].real() == doctest::Approx(0.5 + static_cast<double>(i)));
  CHECK(projection_residual(m, a) < 1e-14);
}
