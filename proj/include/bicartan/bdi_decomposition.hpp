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

#include <cstddef>
#include <vector>

#include "bicartan/lie_bases.hpp"
#include "bicartan/linalg.hpp"
#include "bicartan/matrix.hpp"

namespace bicartan {

/// Cosine-sine form of an orthogonal matrix of size r + q (r >= q):
/// X = diag(K11, K12) * A' * diag(K21, K22), where
/// A' = [[diag(1_{r-q}, C), [0; S]], [-[0; S]^T, C]].
struct BlockKAK {
  std::size_t r = 0;
  std::size_t q = 0;
  Matrix K11, K12, K21, K22;
  Matrix P, Q, C, S;
  /// Rotation angle of plane i, which couples indices r - q + i and r + i.
  std::vector<double> angles;

  Matrix left() const { return direct_sum(K11, K12); }
  Matrix right() const { return direct_sum(K21, K22); }
  Matrix torus() const;
  /// Sum of angle_i * (E_ab - E_ba) over the planes.
  Matrix torus_generator() const;
};

/// Builds A' from the diagonals of C and S.
Matrix assemble_torus(std::size_t r, std::size_t q, std::span<const double> c,
                      std::span<const double> s);

/// Throws NotOrthogonal, BadSplit or SignReconciliationFailure. Every K
/// block is special orthogonal whenever the input is.
BlockKAK bdi_decompose(const Matrix& xt, std::size_t r, std::size_t q,
                       const Tolerance& tol = {});

/// One rotation plane v * (E_tu - E_ut) of a torus basis element, written in
/// the coordinates of the block matrix (t < r <= u).
struct PlanePair {
  std::size_t t = 0;
  std::size_t u = 0;
  double v = 1.0;
};

/// Reads an element that is a single scaled rotation plane. Throws NotInSpan
/// otherwise. The result is oriented so that t lies in [0, r).
PlanePair plane_pair(const Matrix& element, std::size_t r, const Tolerance& tol = {});

/// A factorization K1 * A * K2 whose torus generator is written in a chosen
/// basis: log A = sum_j coefficients[j] * basis element j.
struct AlignedTorus {
  Matrix K1;
  Matrix A;
  Matrix K2;
  std::vector<double> coefficients;
};

/// Conjugates the torus of `kak` by a block-preserving signed permutation
/// so that plane i lands on `targets[i]`. K1 and K2 stay block diagonal and
/// keep their determinants.
AlignedTorus align_torus(const BlockKAK& kak, const std::vector<PlanePair>& targets);

}  // namespace bicartan
