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

#include "bicartan/ai_decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "bicartan/error.hpp"

namespace bicartan {

namespace {

// Irrational weight used to separate eigenvalues of Re S + w Im S.
constexpr double kMix = 0.5772156649015329;

// Reorders and re-signs the columns of an orthogonal matrix so that the
// largest entries sit on the diagonal with positive sign. Eigenvectors of a
// diagonal matrix come back as the identity.
Matrix align_to_axes(const Matrix& o) {
  const std::size_t n = o.rows();
  std::vector<bool> row_used(n, false), col_used(n, false);
  std::vector<std::size_t> target(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    double best = -1.0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (col_used[j]) continue;
        if (std::abs(o(i, j)) > best + 1e-12) {
          best = std::abs(o(i, j));
          bi = i;
          bj = j;
        }
      }
    }
    row_used[bi] = col_used[bj] = true;
    target[bj] = bi;
  }
  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = target[j];
    const double sign = o(k, j).real() < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) out(i, k) = o(i, j) * sign;
  }
  return out;
}

void negate_column(Matrix& m, std::size_t col) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, col) = -m(i, col);
}

}  // namespace

double unitarity_threshold(std::size_t n, const Tolerance& tol) {
  return tol.orthogonality * static_cast<double>(std::max<std::size_t>(n, 1));
}

AITriple ai_decompose(const Matrix& x, const BipartiteShape& shape, const Tolerance& tol) {
  shape.validate();
  const std::size_t n = shape.dimension();
  if (x.rows() != n || x.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "input is " + std::to_string(x.rows()) + "x" +
                                                  std::to_string(x.cols()) + ", shape needs " +
                                                  std::to_string(n));
  }
  if (!x.is_unitary(unitarity_threshold(n, tol))) {
    throw Error(ErrorCode::NotUnitary, "input matrix is not unitary");
  }

  // S = X^T X is unitary and symmetric, so its real and imaginary parts are
  // commuting real symmetric matrices.
  const Matrix s = x.transpose() * x;
  const Matrix re = s.real_part();
  const Matrix im = s.imag_part();
  const auto joint = simultaneous_diagonalize(re + im * kMix, im, tol);
  Matrix o1 = align_to_axes(joint.vectors);
  if (determinant_real(o1) < 0.0) negate_column(o1, 0);

  const Matrix d2 = o1.transpose() * s * o1;
  std::vector<Complex> half_inv(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double phi = principal_phase(d2(k, k), tol);
    half_inv[k] = std::polar(1.0, -phi / 2.0);
  }

  // W = X O1 D^-1 satisfies W^T W = 1 and W^* W = 1, hence is real.
  const Matrix w = x * o1 * Matrix::diagonal(std::span<const Complex>(half_inv));
  const double imaginary = w.imag_part().frobenius_norm();
  if (imaginary > std::sqrt(tol.reconstruction)) {
    throw Error(ErrorCode::RealnessFailure,
                "orthogonal factor has imaginary residual " + format_residual(imaginary));
  }
  Matrix k1 = orthogonal_polar(w.real_part(), tol);

  const Matrix core = k1.transpose() * x * o1;
  std::vector<Complex> diag(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex z = core(k, k);
    diag[k] = std::abs(z) > 0.0 ? z / std::abs(z) : Complex(1.0);
  }
  if (determinant_real(k1) < 0.0) {
    negate_column(k1, 0);
    diag[0] = -diag[0];
  }

  AITriple out{k1, Matrix::diagonal(std::span<const Complex>(diag)), o1.transpose(), shape};
  const double residual = frobenius_distance(out.K1 * out.A * out.K2, x);
  if (residual > tol.reconstruction * static_cast<double>(std::max<std::size_t>(n, 1))) {
    throw Error(ErrorCode::ReconstructionFailure,
                "AI reconstruction residual " + format_residual(residual));
  }
  return out;
}

Matrix ai_torus_generator(const Matrix& a, const Tolerance& tol) {
  if (!a.is_diagonal(tol.zero)) throw Error(ErrorCode::NotUnitary, "torus factor is not diagonal");
  std::vector<Complex> phases(a.rows());
  for (std::size_t k = 0; k < a.rows(); ++k) phases[k] = Complex(0.0, principal_phase(a(k, k), tol));
  return Matrix::diagonal(std::span<const Complex>(phases));
}

}  // namespace bicartan
