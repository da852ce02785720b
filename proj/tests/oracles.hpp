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

// Test-only reference computations. Nothing here calls the routine it is
// used to check.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "bicartan/matrix.hpp"

namespace bicartan::oracle {

/// Exact integer matrix.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<long long> v;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0) {}
  IntMatrix(std::size_t r, std::size_t c, std::initializer_list<long long> values)
      : rows(r), cols(c), v(values) {}

  long long& operator()(std::size_t i, std::size_t j) { return v[i * cols + j]; }
  long long operator()(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
  bool operator==(const IntMatrix&) const = default;

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  IntMatrix transpose() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix to_matrix() const {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<double>((*this)(i, j));
    return m;
  }
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.v.size(); ++k) c.v[k] += b.v[k];
  return c;
}

inline IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.v.size(); ++k) c.v[k] -= b.v[k];
  return c;
}

inline IntMatrix operator*(long long s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.v) x *= s;
  return c;
}

inline IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      for (std::size_t k = 0; k < b.rows; ++k)
        for (std::size_t l = 0; l < b.cols; ++l) c(i * b.rows + k, j * b.cols + l) = a(i, j) * b(k, l);
  return c;
}

inline IntMatrix block_diag(std::initializer_list<IntMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows;
  IntMatrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows; ++i)
      for (std::size_t j = 0; j < b.cols; ++j) m(off + i, off + j) = b(i, j);
    off += b.rows;
  }
  return m;
}

/// [[a, b], [c, d]] from four equal square blocks.
inline IntMatrix blocks2x2(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
  const std::size_t n = a.rows;
  IntMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(i, n + j) = b(i, j);
      m(n + i, j) = c(i, j);
      m(n + i, n + j) = d(i, j);
    }
  return m;
}

/// 1-based E_mk, Delta_mk = E_mk - E_km, Omega_mk = E_mk + E_km.
inline IntMatrix E(std::size_t n, std::size_t m, std::size_t k) {
  IntMatrix e(n, n);
  e(m - 1, k - 1) = 1;
  return e;
}
inline IntMatrix Delta(std::size_t n, std::size_t m, std::size_t k) { return E(n, m, k) - E(n, k, m); }
inline IntMatrix Omega(std::size_t n, std::size_t m, std::size_t k) { return E(n, m, k) + E(n, k, m); }

inline bool is_zero(const IntMatrix& m) {
  for (auto x : m.v)
    if (x != 0) return false;
  return true;
}

/// Taylor series with scaling and squaring, written independently of the
/// library's exponential.
inline Matrix expm(const Matrix& a) {
  const std::size_t n = a.rows();
  double norm = 0.0;
  for (const auto& z : a.entries()) norm += std::norm(z);
  norm = std::sqrt(norm);
  int squarings = 0;
  while (norm > 0.125) {
    norm /= 2.0;
    ++squarings;
  }
  std::vector<std::complex<double>> s(a.entries().begin(), a.entries().end());
  for (auto& z : s) z = std::ldexp(1.0, -squarings) * z;
  std::vector<std::complex<double>> result(n * n, 0.0), term(n * n, 0.0), next(n * n);
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = term[i * n + i] = 1.0;
  for (int k = 1; k <= 40; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] += term[i * n + l] * s[l * n + j];
    for (auto& z : next) z /= static_cast<double>(k);
    term = next;
    for (std::size_t q = 0; q < n * n; ++q) result[q] += term[q];
  }
  for (int k = 0; k < squarings; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] += result[i * n + l] * result[l * n + j];
    result = next;
  }
  return Matrix(n, n, result);
}

/// Rotation by angle t in the plane (a, b) of R^n: +sin at (a, b).
inline Matrix plane_rotation(std::size_t n, std::size_t a, std::size_t b, double t) {
  Matrix m = Matrix::identity(n);
  m(a, a) = std::cos(t);
  m(b, b) = std::cos(t);
  m(a, b) = std::sin(t);
  m(b, a) = -std::sin(t);
  return m;
}

/// Closed-form Euler angles of K in SO(3) written as
/// rot(0,1; a) * rot(1,2; b) * rot(0,1; c), with b in [0, pi].
struct Euler3 {
  double a, b, c;
};
inline Euler3 euler3(const Matrix& k) {
  const double k02 = k(0, 2).real(), k12 = k(1, 2).real(), k22 = k(2, 2).real();
  const double k20 = k(2, 0).real(), k21 = k(2, 1).real();
  const double sb = std::sqrt(k02 * k02 + k12 * k12);
  Euler3 e{0.0, std::atan2(sb, k22), 0.0};
  if (sb < 1e-9) {
    // Degenerate: a single rotation in the (0, 1) plane (possibly composed
    // with a half turn in the middle).
    const double s = k22 > 0 ? k(0, 1).real() : -k(0, 1).real();
    e.a = std::atan2(s, k(0, 0).real());
  } else {
    e.a = std::atan2(k02, k12);
    e.c = std::atan2(k20, -k21);
  }
  return e;
}

/// Coefficient of kron(b1, b2) in h by explicit trace, no sparsity used.
inline std::complex<double> product_coefficient(const Matrix& h, const Matrix& b1, const Matrix& b2) {
  const Matrix b = bicartan::kron(b1, b2);
  std::complex<double> num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      num += h(i, j) * std::conj(b(i, j));
      den += std::norm(b(i, j));
    }
  return num / den;
}

}  // namespace bicartan::oracle
