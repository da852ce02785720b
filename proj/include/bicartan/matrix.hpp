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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace bicartan {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major.
///
/// Entries that start out as small integers stay exact through the kernels
/// that only add, subtract and multiply them (permutations, tensor products,
/// block assembly), so the integer examples compare with `==`.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Row-major real entries, e.g. `Matrix::real(2, 2, {0, 1, 1, 0})`.
  static Matrix real(std::size_t rows, std::size_t cols,
                     std::initializer_list<double> entries);
  static Matrix identity(std::size_t n);
  static Matrix zeros(std::size_t rows, std::size_t cols);
  static Matrix diagonal(std::span<const Complex> values);
  static Matrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Matrix transpose() const;
  Matrix adjoint() const;
  Matrix conj() const;
  Matrix real_part() const;
  Matrix imag_part() const;
  Complex trace() const;

  Matrix block(std::size_t row, std::size_t col, std::size_t nrows,
               std::size_t ncols) const;
  void set_block(std::size_t row, std::size_t col, const Matrix& b);

  double frobenius_norm() const;
  double max_abs() const;

  bool is_real(double tol) const;
  bool is_symmetric(double tol) const;
  bool is_skew(double tol) const;
  bool is_skew_hermitian(double tol) const;
  bool is_diagonal(double tol) const;
  bool is_unitary(double tol) const;
  bool is_orthogonal(double tol) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scalar);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, Matrix a);
Matrix operator*(Matrix a, Complex s);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
/// Block-diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Trace inner product <A, B> = Tr(A B^*).
Complex trace_inner(const Matrix& a, const Matrix& b);
double frobenius_distance(const Matrix& a, const Matrix& b);
double determinant_real(const Matrix& a);

/// M' = P M P^T for the permutation sending old index order[k] to new index k.
Matrix permute(const Matrix& m, std::span<const std::size_t> order);
/// Inverse of `permute`.
Matrix unpermute(const Matrix& m, std::span<const std::size_t> order);
/// Places `local` on the rows/cols listed in `index` of an n x n identity.
Matrix embed(const Matrix& local, std::span<const std::size_t> index,
             std::size_t n, bool pad_identity = true);
Matrix submatrix(const Matrix& m, std::span<const std::size_t> index);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace bicartan
