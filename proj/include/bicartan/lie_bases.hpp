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
#include <vector>

#include "bicartan/linalg.hpp"
#include "bicartan/matrix.hpp"

namespace bicartan {

struct BipartiteShape {
  std::size_t d1 = 1;
  std::size_t d2 = 1;

  std::size_t dimension() const noexcept { return d1 * d2; }
  void validate() const;
  friend bool operator==(const BipartiteShape&, const BipartiteShape&) = default;
};

/// Per-subsystem block split. A subsystem of dimension 1 uses (1, 0): it has
/// nothing to split and contributes only its top block.
struct SplitPlan {
  std::size_t r1 = 1, q1 = 1, r2 = 1, q2 = 1;

  std::size_t r() const noexcept { return r1 * r2 + q1 * q2; }
  std::size_t q() const noexcept { return r1 * q2 + q1 * r2; }
  BipartiteShape shape() const noexcept { return {r1 + q1, r2 + q2}; }

  /// Throws BadSplit when r_j < q_j, q_j = 0 with d_j > 1, or r < q.
  void validate() const;
  friend bool operator==(const SplitPlan&, const SplitPlan&) = default;
};

std::string to_string(const SplitPlan& split);

enum class BasisRole { k, p, a, k1, p1, a1, k2, p2, a2, s1, s2 };
std::string_view to_string(BasisRole role);

struct SubspaceBasis {
  BasisRole role;
  std::vector<Matrix> elements;
  std::vector<std::string> labels;
  BipartiteShape shape;
  std::optional<SplitPlan> split;

  std::size_t size() const noexcept { return elements.size(); }
};

// 1-based indices, matching the usual E_mk notation.
Matrix elementary(std::size_t n, std::size_t m, std::size_t k);
Matrix delta(std::size_t n, std::size_t m, std::size_t k);
Matrix omega(std::size_t n, std::size_t m, std::size_t k);

enum class Pauli { x, y, z, id };
Matrix pauli(Pauli which);

struct BipartiteSpans {
  SubspaceBasis k, p, a;
};
/// The initial (AI-type) split of u(d1 d2): k = so(d1 d2) in product form.
BipartiteSpans bipartite_spans(const BipartiteShape& shape);

/// Tensor-basis indices listed in the block order
/// [r1 r2 | q1 q2 | r1 q2 | q1 r2], each block row-major in its own pair.
std::vector<std::size_t> conjugacy_order(const SplitPlan& split);
/// Permutation matrix R with R(new, old) = 1 for the order above.
Matrix conjugacy_R(const SplitPlan& split);

struct PrimeSpans {
  SubspaceBasis k, p;
};
PrimeSpans prime_spans(const BipartiteShape& shape, const SplitPlan& split);
/// Second-stage split of k' into the four diagonal blocks and its complement.
PrimeSpans double_prime_spans(const BipartiteShape& shape, const SplitPlan& split);

/// Commuting E_jj x Delta_{k, r2+k} and Delta_{f, r1+f} x E_ll matrices.
SubspaceBasis cartan_a_prime(const SplitPlan& split);
/// Commuting symmetric (N) and antisymmetric (M) cross-block matrices.
SubspaceBasis cartan_a_dprime(const SplitPlan& split);

/// Frobenius norm of the part of `m` orthogonal to span(basis).
double projection_residual(const Matrix& m, const SubspaceBasis& basis);
/// Coefficients of the orthogonal projection (requires an orthogonal basis).
std::vector<Complex> project_coefficients(const Matrix& m, const SubspaceBasis& basis);

}  // namespace bicartan
