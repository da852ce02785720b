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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicartan/lie_bases.hpp"
#include "bicartan/linalg.hpp"
#include "bicartan/matrix.hpp"

namespace bicartan {

enum class FactorKind { ai_k, ai_a, bdi_k, bdi_a, euler_l, euler_n, so4_s1, so4_s2, terminal_so2 };
std::string_view to_string(FactorKind kind);

enum class Locality { unknown, local, entangling };
std::string_view to_string(Locality locality);

struct Factor {
  FactorKind kind = FactorKind::ai_k;
  /// Acts on the whole space, in the tensor-product basis of the input.
  Matrix matrix;
  /// exp(generator) = matrix.
  Matrix generator;
  std::size_t level = 0;
  Locality locality = Locality::unknown;
  /// Global basis indices of the block this factor was produced in; local
  /// index a of that block is global index support[a].
  std::vector<std::size_t> support;
  /// Split in force where the factor was produced (K and A factors of a
  /// BDI level); unset for factors lifted from a single subsystem.
  std::optional<SplitPlan> split;
  /// Shape of the block this factor lives in.
  BipartiteShape block_shape;
  /// For torus factors: the Cartan basis and the coordinates of the
  /// generator in it (generator lifted to the block's local coordinates).
  std::optional<BasisRole> cartan_role;
  std::vector<double> coefficients;
  /// Finer factorization; the ordered product of the parts is `matrix`.
  std::vector<Factor> parts;
};

/// Per-level split choices. Level 1 is the first BDI level. A plan is used
/// only when its shape matches the block being split; otherwise the
/// balanced choice applies.
struct SplitStrategy {
  std::vector<SplitPlan> levels;

  std::string name() const;
};

/// Balanced (ceil(d/2), floor(d/2)). Throws DimensionTooSmall for d < 2.
std::pair<std::size_t, std::size_t> choose_split(std::size_t d);

/// Plan for a block: the strategy's plan for `level` if the shape matches,
/// otherwise balanced on each side (a dimension of 1 gets (1, 0)).
SplitPlan plan_for(const BipartiteShape& shape, std::size_t level, const SplitStrategy& strategy);

/// The two commuting so(3) directions of a 2x2 bipartite block:
/// s1 = {i sy x 1, i sx x sy, i sz x sy}, s2 = {i 1 x sy, i sy x sx, i sy x sz}
/// (each real, squaring to -1).
std::vector<Matrix> so4_directions(BasisRole which);

/// K = F1 * F2 with F1 generated by s1 and F2 by s2. Throws NotInSpan if K
/// is not in SO(4).
std::pair<Matrix, Matrix> so4_split(const Matrix& k, const Tolerance& tol = {});

struct EulerFactors {
  Matrix L1, N, L2;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta = 0.0;
};

/// F = exp(alpha1 e1) exp(beta e2) exp(alpha2 e1) for the first two
/// directions e1, e2 of s1 or s2. When the middle angle is degenerate
/// alpha2 is 0. Throws NotInSubgroup.
EulerFactors euler_so3(const Matrix& f, BasisRole which, const Tolerance& tol = {});

/// Rotation angles of K in SO(3) as exp(a1 D12) exp(b D23) exp(a2 D12).
EulerFactors euler_rotation3(const Matrix& k, const Tolerance& tol = {});

struct FactorTree {
  Matrix input;
  BipartiteShape shape;
  std::string strategy;
  /// AI-K, AI-A, AI-K; each K carries its recursive factorization in parts.
  std::vector<Factor> factors;

  /// Depth-first leaves, in multiplication order.
  std::vector<const Factor*> leaves() const;
  std::vector<Factor*> leaves();
  /// Ordered product of the leaves.
  Matrix product() const;
  double residual() const;
};

/// Orthogonal K of a block with the given shape, factored in the block's own
/// coordinates.
std::vector<Factor> decompose_orthogonal(const Matrix& k, const BipartiteShape& shape,
                                         std::size_t level, const SplitStrategy& strategy,
                                         const Tolerance& tol = {});

/// (U1, U2) with U1 x U2 = x, or nothing when x is not a product.
std::optional<std::pair<Matrix, Matrix>> split_product(const Matrix& x, const BipartiteShape& shape,
                                                       const Tolerance& tol = {});

/// A product input is factored subsystem by subsystem, so every factor is
/// local. Throws NotUnitary, ReconstructionFailure and anything raised by
/// the steps.
FactorTree recursive_decompose(const Matrix& x, const BipartiteShape& shape,
                               const SplitStrategy& strategy = {}, const Tolerance& tol = {});

}  // namespace bicartan
