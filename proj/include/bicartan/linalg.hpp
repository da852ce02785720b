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

#include <cstdint>
#include <vector>

#include "bicartan/matrix.hpp"

namespace bicartan {

/// Numerical thresholds shared by every module.
struct Tolerance {
  double reconstruction = 1e-10;
  double orthogonality = 1e-10;
  /// Eigenvalues closer than this are treated as one repeated eigenvalue.
  double cluster = 1e-8;
  /// Entrywise zero test and projection-residual threshold.
  double zero = 1e-12;

  /// Throws ParseError unless every field is positive and cluster >= zero.
  void validate() const;
};

struct EigenSystem {
  Matrix vectors;              ///< columns are eigenvectors
  std::vector<double> values;  ///< descending
};

/// Cyclic Jacobi for a real symmetric matrix.
///
/// Eigenvalues come back in descending order (stable for ties) and every
/// eigenvector has its first non-negligible component positive.
EigenSystem jacobi_eigh(const Matrix& s, const Tolerance& tol = {});

/// Complex Jacobi for a Hermitian matrix; real input stays real.
EigenSystem hermitian_eigh(const Matrix& h, const Tolerance& tol = {});

struct SimultaneousEigen {
  Matrix vectors;
  std::vector<double> a;
  std::vector<double> b;
};

/// Diagonalizes commuting real symmetric `a` and `b` with one orthogonal
/// matrix: eigenvectors of `a`, then `b` diagonalized inside each cluster.
SimultaneousEigen simultaneous_diagonalize(const Matrix& a, const Matrix& b,
                                           const Tolerance& tol = {});

/// Same as above for commuting Hermitian matrices (unitary eigenvectors).
SimultaneousEigen simultaneous_hermitian(const Matrix& a, const Matrix& b,
                                         const Tolerance& tol = {});

struct Svd {
  Matrix u;
  std::vector<double> sigma;  ///< descending
  Matrix v;                   ///< a = u * diag(sigma) * v^T
};

/// One-sided Jacobi SVD of a real square matrix.
Svd jacobi_svd(const Matrix& a, const Tolerance& tol = {});

/// Gram-Schmidt (two passes) over the columns of `m`; a column whose
/// residual falls below `drop` is replaced by the standard basis vector with
/// the largest residual.
Matrix orthonormalize_columns(const Matrix& m, double drop = 0.5);

/// Nearest orthogonal matrix (orthogonal polar factor).
Matrix orthogonal_polar(const Matrix& m, const Tolerance& tol = {});

/// Principal eigenphase in (-pi, pi]; a phase at -pi is reported as +pi.
double principal_phase(Complex z, const Tolerance& tol = {});

/// Skew-Hermitian H with exp(H) = U, eigenphases in (-pi, pi].
Matrix unitary_log(const Matrix& u, const Tolerance& tol = {});

/// Real skew-symmetric L with exp(L) = K for K in SO(n). The -1 eigenspace is
/// paired into planes rotated by +pi.
Matrix orthogonal_log(const Matrix& k, const Tolerance& tol = {});

/// Matrix exponential by scaling and squaring of a Taylor series.
Matrix expm(const Matrix& a);

Matrix random_unitary(std::size_t n, std::uint64_t seed);
/// Haar-like element of SO(n) (determinant forced to +1).
Matrix random_special_orthogonal(std::size_t n, std::uint64_t seed);

}  // namespace bicartan
