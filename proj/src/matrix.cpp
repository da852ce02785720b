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

#include "bicartan/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

#include "bicartan/error.hpp"

namespace bicartan {

std::string format_residual(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ShapeTooSmall: return "ShapeTooSmall";
    case ErrorCode::BadSplit: return "BadSplit";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RealnessFailure: return "RealnessFailure";
    case ErrorCode::SignReconciliationFailure: return "SignReconciliationFailure";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::NotInSubgroup: return "NotInSubgroup";
    case ErrorCode::NotSkewHermitian: return "NotSkewHermitian";
    case ErrorCode::MissingGenerator: return "MissingGenerator";
    case ErrorCode::ReconstructionFailure: return "ReconstructionFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
  }
}

Matrix Matrix::real(std::size_t rows, std::size_t cols,
                    std::initializer_list<double> entries) {
  std::vector<Complex> values(entries.begin(), entries.end());
  return Matrix(rows, cols, std::move(values));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols);
}

Matrix Matrix::diagonal(std::span<const Complex> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

Matrix Matrix::conj() const {
  Matrix c = *this;
  for (auto& z : c.entries_) z = std::conj(z);
  return c;
}

Matrix Matrix::real_part() const {
  Matrix c = *this;
  for (auto& z : c.entries_) z = z.real();
  return c;
}

Matrix Matrix::imag_part() const {
  Matrix c = *this;
  for (auto& z : c.entries_) z = z.imag();
  return c;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::block(std::size_t row, std::size_t col, std::size_t nrows,
                     std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "block outside matrix");
  }
  Matrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row + i, col + j);
  return b;
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& b) {
  if (row + b.rows() > rows_ || col + b.cols() > cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "block outside matrix");
  }
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(row + i, col + j) = b(i, j);
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

bool Matrix::is_real(double tol) const {
  return imag_part().frobenius_norm() <= tol;
}

bool Matrix::is_symmetric(double tol) const {
  return square() && frobenius_distance(*this, transpose()) <= tol;
}

bool Matrix::is_skew(double tol) const {
  return square() && (*this + transpose()).frobenius_norm() <= tol;
}

bool Matrix::is_skew_hermitian(double tol) const {
  return square() && (*this + adjoint()).frobenius_norm() <= tol;
}

bool Matrix::is_diagonal(double tol) const {
  double off = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j) off += std::norm((*this)(i, j));
  return std::sqrt(off) <= tol;
}

bool Matrix::is_unitary(double tol) const {
  return square() &&
         frobenius_distance(adjoint() * *this, identity(rows_)) <= tol;
}

bool Matrix::is_orthogonal(double tol) const {
  return is_real(tol) &&
         frobenius_distance(transpose() * *this, identity(rows_)) <= tol;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= -1.0; }
Matrix operator*(Complex s, Matrix a) { return a *= s; }
Matrix operator*(Matrix a, Complex s) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product inner dimensions");
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

Complex trace_inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "trace_inner");
  Complex s = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) s += ea[k] * std::conj(eb[k]);
  return s;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  double s = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) s += std::norm(ea[k] - eb[k]);
  return std::sqrt(s);
}

double determinant_real(const Matrix& a) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square");
  const std::size_t n = a.rows();
  std::vector<double> lu(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lu[i * n + j] = a(i, j).real();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu[i * n + k]) > std::abs(lu[pivot * n + k])) pivot = i;
    if (lu[pivot * n + k] == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu[k * n + j], lu[pivot * n + j]);
      det = -det;
    }
    det *= lu[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu[i * n + k] / lu[k * n + k];
      for (std::size_t j = k; j < n; ++j) lu[i * n + j] -= f * lu[k * n + j];
    }
  }
  return det;
}

Matrix permute(const Matrix& m, std::span<const std::size_t> order) {
  Matrix p(order.size(), order.size());
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < order.size(); ++b) p(a, b) = m(order[a], order[b]);
  return p;
}

Matrix unpermute(const Matrix& m, std::span<const std::size_t> order) {
  Matrix p(order.size(), order.size());
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < order.size(); ++b) p(order[a], order[b]) = m(a, b);
  return p;
}

Matrix embed(const Matrix& local, std::span<const std::size_t> index,
             std::size_t n, bool pad_identity) {
  Matrix m = pad_identity ? Matrix::identity(n) : Matrix::zeros(n, n);
  for (std::size_t a = 0; a < index.size(); ++a) {
    for (std::size_t b = 0; b < index.size(); ++b) m(index[a], index[b]) = local(a, b);
  }
  return m;
}

Matrix submatrix(const Matrix& m, std::span<const std::size_t> index) {
  return permute(m, index);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      if (j) os << ", ";
      if (z.imag() == 0.0) {
        os << z.real();
      } else {
        os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
      }
    }
    os << (i + 1 == m.rows() ? "]" : "\n");
  }
  return os;
}

}  // namespace bicartan
