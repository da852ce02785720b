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

#pragma once

#include "bicartan/lie_bases.hpp"
#include "bicartan/linalg.hpp"
#include "bicartan/matrix.hpp"

namespace bicartan {

/// X = K1 * A * K2 with K1, K2 in SO(n) and A diagonal unitary.
struct AITriple {
  Matrix K1;
  Matrix A;
  Matrix K2;
  BipartiteShape shape;
};

/// Splits a unitary of size d1*d2 into orthogonal, torus and orthogonal
/// factors. The eigenvectors of X^T X give K2; K1 is whatever remains after
/// the torus is peeled off, and is checked to be real.
///
/// Throws NotUnitary, DimensionMismatch or RealnessFailure.
AITriple ai_decompose(const Matrix& x, const BipartiteShape& shape,
                      const Tolerance& tol = {});

/// i * diag(phases of A), each phase in (-pi, pi].
Matrix ai_torus_generator(const Matrix& a, const Tolerance& tol = {});

/// Unitarity threshold used on inputs of size n.
double unitarity_threshold(std::size_t n, const Tolerance& tol);

}  // namespace bicartan
