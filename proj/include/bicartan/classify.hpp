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
#include <string>
#include <string_view>
#include <vector>

#include "bicartan/lie_bases.hpp"
#include "bicartan/linalg.hpp"
#include "bicartan/matrix.hpp"
#include "bicartan/recursion.hpp"

namespace bicartan {

enum class LocalType { E, O, D };

/// One element of the per-subsystem basis: E_mm, Omega_mn or Delta_mn
/// (1-based, m < n for the last two).
struct LocalElement {
  LocalType type;
  std::size_t m;
  std::size_t n;
  Matrix matrix;

  std::string label() const;
};

/// E_11..E_dd, then Omega_mn and Delta_mn in lexicographic order. The set is
/// trace-orthogonal and spans gl(d, R).
std::vector<LocalElement> local_basis(std::size_t d);

struct GeneratorTerm {
  std::size_t index1;  ///< into local_basis(d1)
  std::size_t index2;  ///< into local_basis(d2)
  Complex coefficient;
};

/// H = sum coefficient * (B1[index1] x B2[index2]) + remainder.
struct GeneratorCoefficients {
  BipartiteShape shape;
  std::vector<GeneratorTerm> terms;
  double residual = 0.0;

  Matrix reassemble() const;
};

/// Throws NotSkewHermitian and DimensionMismatch.
GeneratorCoefficients tensor_expand(const Matrix& h, const BipartiteShape& shape,
                                    const Tolerance& tol = {});

/// H minus its projection onto {B x 1} + {1 x B}.
Matrix nonlocal_part(const Matrix& h, const BipartiteShape& shape);

bool is_local(const Matrix& h, const BipartiteShape& shape, const Tolerance& tol = {});

/// Support-pattern families of entangling generators.
///   ising: E_jj x E_kk
///   fa:    E_jj x Delta_kl or Delta_kl x E_jj
///   fb:    Delta x Omega + Omega x Delta on the same index pairs
///   fc:    Delta x Omega - Omega x Delta on the same index pairs
/// A general combination x (Delta x Omega) + y (Omega x Delta) is split into
/// its fb part (x + y)/2 and its fc part (x - y)/2.
///   other: anything else
enum class Family { ising, fa, fb, fc, other };
std::string_view to_string(Family family);

struct FamilyComponent {
  Family family;
  /// Unit-coefficient witness of the pattern (a single term or term pair).
  Matrix representative;
  std::string label;
  /// Largest coefficient magnitude of the family in the generator.
  double weight = 0.0;
};

/// Families present in the nonlocal part of H, strongest witness first
/// within each family.
std::vector<FamilyComponent> family_components(const Matrix& h, const BipartiteShape& shape,
                                               const Tolerance& tol = {});

struct InventoryEntry {
  Family family;
  std::string label;
  Matrix representative;
  std::size_t count = 0;
};

struct HamiltonianInventory {
  std::vector<InventoryEntry> entries;

  bool contains(Family family) const;
};

/// Fills `locality` on every node of the tree.
void classify_tree(FactorTree& tree, const Tolerance& tol = {});

/// Groups the entangling leaves by family; a leaf whose generator touches
/// several families counts once in each. Throws MissingGenerator.
HamiltonianInventory inventory(const FactorTree& tree, const Tolerance& tol = {});

}  // namespace bicartan
