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

// Worked SWAP example for d1 = 2, d2 = 4: reference integer factors
// and generators, typed in by hand.

#pragma once

#include <numbers>

#include "oracles.hpp"

namespace bicartan::fixture {

using oracle::IntMatrix;

inline IntMatrix x_sw() {
  return IntMatrix(8, 8, {1, 0, 0, 0, 0, 0, 0, 0,  //
                          0, 0, 1, 0, 0, 0, 0, 0,  //
                          0, 0, 0, 0, 1, 0, 0, 0,  //
                          0, 0, 0, 0, 0, 0, 1, 0,  //
                          0, 1, 0, 0, 0, 0, 0, 0,  //
                          0, 0, 0, 1, 0, 0, 0, 0,  //
                          0, 0, 0, 0, 0, 1, 0, 0,  //
                          0, 0, 0, 0, 0, 0, 0, 1});
}

inline IntMatrix r_change() {
  const IntMatrix i2 = IntMatrix::identity(2);
  const IntMatrix z2(2, 2);
  IntMatrix r(8, 8);
  const IntMatrix* layout[4][4] = {{&i2, &z2, &z2, &z2},
                                   {&z2, &z2, &z2, &i2},
                                   {&z2, &i2, &z2, &z2},
                                   {&z2, &z2, &i2, &z2}};
  for (std::size_t bi = 0; bi < 4; ++bi)
    for (std::size_t bj = 0; bj < 4; ++bj)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(2 * bi + i, 2 * bj + j) = (*layout[bi][bj])(i, j);
  return r;
}

inline IntMatrix x_sw_tilde() {
  return IntMatrix(8, 8, {1, 0, 0, 0, 0, 0, 0, 0,  //
                          0, 0, 0, 0, 1, 0, 0, 0,  //
                          0, 0, 0, 0, 0, 0, 0, 1,  //
                          0, 0, 0, 1, 0, 0, 0, 0,  //
                          0, 0, 0, 0, 0, 0, 1, 0,  //
                          0, 0, 1, 0, 0, 0, 0, 0,  //
                          0, 1, 0, 0, 0, 0, 0, 0,  //
                          0, 0, 0, 0, 0, 1, 0, 0});
}

inline IntMatrix k11() { return IntMatrix(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1}); }
inline IntMatrix k12() { return -1 * IntMatrix(4, 4, {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0}); }
inline IntMatrix k21() { return IntMatrix::identity(4); }
inline IntMatrix k22() { return IntMatrix(4, 4, {0, -1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0}); }
inline IntMatrix d1() { return IntMatrix(4, 4, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1}); }
inline IntMatrix d2() { return IntMatrix(4, 4, {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}); }

inline IntMatrix a_prime_tilde() { return oracle::blocks2x2(d1(), d2(), -1 * d2(), d1()); }

/// Second-level factors in the rotated coordinates.
inline IntMatrix j2() { return IntMatrix(2, 2, {0, -1, 1, 0}); }
inline IntMatrix a4() { return IntMatrix(4, 4, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0}); }
inline IntMatrix a1_tilde() {
  return oracle::block_diag({a4(), IntMatrix(4, 4, {0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0})});
}
inline IntMatrix a2_tilde() { return oracle::block_diag({IntMatrix::identity(4), a4()}); }
inline IntMatrix k1_tilde() {
  const IntMatrix i2 = IntMatrix::identity(2);
  return oracle::block_diag({i2, j2(), j2(), -1 * j2()});
}
inline IntMatrix k2_tilde() {
  const IntMatrix i2 = IntMatrix::identity(2);
  return oracle::block_diag({i2, j2(), i2, i2});
}
inline IntMatrix k3_tilde() {
  const IntMatrix i2 = IntMatrix::identity(2);
  return oracle::block_diag({i2, i2, i2, j2()});
}
inline IntMatrix k4_tilde() {
  const IntMatrix i2 = IntMatrix::identity(2);
  return oracle::block_diag({i2, i2, j2(), i2});
}

/// Generators in the tensor basis, as real matrices.
struct Generators {
  Matrix a_prime, a1, a2, k1, k2, k3, k4;
};

inline Matrix term(double c, const IntMatrix& a, const IntMatrix& b) {
  return oracle::kron(a, b).to_matrix() * Complex(c);
}

inline Matrix h1() { return oracle::kron(oracle::E(2, 1, 1), oracle::Delta(4, 3, 4)).to_matrix(); }
inline Matrix h2() {
  using namespace oracle;
  return (kron(Delta(2, 1, 2), Omega(4, 2, 4)) + kron(Omega(2, 1, 2), Delta(4, 2, 4))).to_matrix();
}
inline Matrix h3() {
  using namespace oracle;
  return (kron(Delta(2, 1, 2), Omega(4, 2, 4)) - kron(Omega(2, 1, 2), Delta(4, 2, 4))).to_matrix();
}

inline Generators generators() {
  using namespace oracle;
  constexpr double pi = std::numbers::pi;
  const IntMatrix e11 = E(2, 1, 1), e22 = E(2, 2, 2), d12 = Delta(2, 1, 2), o12 = Omega(2, 1, 2);
  Generators g;
  g.a_prime = term(pi / 2, e11, Delta(4, 2, 4)) + term(3 * pi / 2, e22, Delta(4, 1, 3)) +
              term(pi, e22, Delta(4, 2, 4));
  const Matrix m13 = term(1.0, d12, Omega(4, 1, 3)) - term(1.0, o12, Delta(4, 1, 3));
  g.a1 = h2() * Complex(pi / 4) + h3() * Complex(pi / 4) + m13 * Complex(3 * pi / 4);
  g.a2 = h3() * Complex(pi / 4);
  g.k1 = term(3 * pi / 2, e22, Delta(4, 3, 4)) + term(pi / 2, e22, Delta(4, 1, 2)) +
         term(3 * pi / 2, e11, Delta(4, 3, 4));
  g.k2 = term(3 * pi / 2, e22, Delta(4, 3, 4));
  g.k3 = term(3 * pi / 2, e22, Delta(4, 1, 2));
  g.k4 = term(3 * pi / 2, e11, Delta(4, 3, 4));
  return g;
}

}  // namespace bicartan::fixture
