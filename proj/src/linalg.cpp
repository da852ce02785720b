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

#include "bicartan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "bicartan/error.hpp"

namespace bicartan {

namespace {

constexpr int kMaxSweeps = 80;
constexpr double kEps = 1e-16;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Applies the real rotation (c, s) on indices p, q: A <- P^T A P, V <- V P.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q, double c, double s) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  for (std::size_t k = 0; k < v.rows(); ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

// Multiplies column q of A and V by phase, row q of A by conj(phase).
void rephase(Matrix& a, Matrix& v, std::size_t q, Complex phase) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) a(k, q) *= phase;
  for (std::size_t k = 0; k < n; ++k) a(q, k) *= std::conj(phase);
  for (std::size_t k = 0; k < v.rows(); ++k) v(k, q) *= phase;
}

// Column phase/sign convention: first component above `threshold` is real
// and positive.
void normalize_column_phase(Matrix& v, std::size_t col, double threshold) {
  for (std::size_t k = 0; k < v.rows(); ++k) {
    const Complex z = v(k, col);
    if (std::abs(z) > threshold) {
      if (z.imag() == 0.0) {
        if (z.real() < 0.0)
          for (std::size_t i = 0; i < v.rows(); ++i) v(i, col) = -v(i, col);
      } else {
        const Complex phase = std::conj(z) / std::abs(z);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, col) *= phase;
      }
      return;
    }
  }
}

EigenSystem sorted_system(const Matrix& a, const Matrix& v, const Tolerance& tol) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });
  EigenSystem out{Matrix(n, n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(idx[k], idx[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, idx[k]);
    normalize_column_phase(out.vectors, k, tol.cluster);
  }
  return out;
}

EigenSystem jacobi_core(const Matrix& input, const Tolerance& tol) {
  Matrix a = input;
  const std::size_t n = a.rows();
  Matrix v = Matrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), 1e-300);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kEps * scale) break;
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (mag <= kEps * 1e-2 * (std::abs(app) + std::abs(aqq)) && sweep > 3) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        double apq = g.real();
        if (g.imag() != 0.0) {
          rephase(a, v, q, std::conj(g) / mag);
          apq = mag;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        rotate(a, v, p, q, c, s);
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        rotated = true;
      }
    }
    if (!rotated) break;
  }
  if (off_diagonal_norm(a) > tol.zero * std::max(1.0, scale)) {
    throw Error(ErrorCode::NoConvergence, "Jacobi sweeps exhausted");
  }
  return sorted_system(a, v, tol);
}

double symmetry_scale(const Matrix& m) { return std::max(1.0, m.frobenius_norm()); }

}  // namespace

void Tolerance::validate() const {
  if (!(reconstruction > 0 && orthogonality > 0 && cluster > 0 && zero > 0) ||
      cluster < zero) {
    throw Error(ErrorCode::ParseError, "tolerances must be positive with cluster >= zero");
  }
}

EigenSystem jacobi_eigh(const Matrix& s, const Tolerance& tol) {
  if (!s.square() || !s.is_real(tol.zero * symmetry_scale(s)) ||
      !s.is_symmetric(tol.zero * symmetry_scale(s))) {
    throw Error(ErrorCode::NotSymmetric, "jacobi_eigh needs a real symmetric matrix");
  }
  Matrix sym = (s + s.transpose()).real_part() * Complex(0.5);
  return jacobi_core(sym, tol);
}

EigenSystem hermitian_eigh(const Matrix& h, const Tolerance& tol) {
  if (!h.square() || frobenius_distance(h, h.adjoint()) > tol.zero * symmetry_scale(h)) {
    throw Error(ErrorCode::NotSymmetric, "hermitian_eigh needs a Hermitian matrix");
  }
  Matrix herm = (h + h.adjoint()) * Complex(0.5);
  return jacobi_core(herm, tol);
}

namespace {

SimultaneousEigen simultaneous_impl(const Matrix& a, const Matrix& b,
                                    const Tolerance& tol) {
  const double scale = std::max(1.0, a.frobenius_norm() * b.frobenius_norm());
  if (commutator(a, b).frobenius_norm() > tol.zero * scale * 10.0) {
    throw Error(ErrorCode::NotCommuting, "matrices do not commute");
  }
  EigenSystem ea = hermitian_eigh(a, tol);
  Matrix v = ea.vectors;
  const std::size_t n = a.rows();
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && std::abs(ea.values[end - 1] - ea.values[end]) <= tol.cluster) ++end;
    if (end - start > 1) {
      const Matrix vc = v.block(0, start, n, end - start);
      Matrix bc = vc.adjoint() * b * vc;
      bc = (bc + bc.adjoint()) * Complex(0.5);
      const EigenSystem eb = jacobi_core(bc, tol);
      v.set_block(0, start, vc * eb.vectors);
    }
    start = end;
  }
  SimultaneousEigen out{v, std::vector<double>(n), std::vector<double>(n)};
  const Matrix da = v.adjoint() * a * v;
  const Matrix db = v.adjoint() * b * v;
  for (std::size_t k = 0; k < n; ++k) {
    out.a[k] = da(k, k).real();
    out.b[k] = db(k, k).real();
  }
  return out;
}

}  // namespace

SimultaneousEigen simultaneous_diagonalize(const Matrix& a, const Matrix& b,
                                           const Tolerance& tol) {
  for (const Matrix* m : {&a, &b}) {
    if (!m->square() || !m->is_real(tol.zero * symmetry_scale(*m)) ||
        !m->is_symmetric(tol.zero * symmetry_scale(*m))) {
      throw Error(ErrorCode::NotSymmetric, "simultaneous_diagonalize needs real symmetric input");
    }
  }
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "size mismatch");
  return simultaneous_impl(a.real_part(), b.real_part(), tol);
}

SimultaneousEigen simultaneous_hermitian(const Matrix& a, const Matrix& b,
                                         const Tolerance& tol) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "size mismatch");
  return simultaneous_impl(a, b, tol);
}

Svd jacobi_svd(const Matrix& input, const Tolerance& tol) {
  if (!input.square()) throw Error(ErrorCode::DimensionMismatch, "jacobi_svd needs a square matrix");
  if (!input.is_real(tol.zero * symmetry_scale(input))) {
    throw Error(ErrorCode::NotOrthogonal, "jacobi_svd needs a real matrix");
  }
  const std::size_t n = input.rows();
  std::vector<double> b(n * n);
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    v[i * n + i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) b[i * n + j] = input(i, j).real();
  }
  auto col_dot = [&](const std::vector<double>& m, std::size_t p, std::size_t q) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += m[k * n + p] * m[k * n + q];
    return s;
  };
  double total = 0.0;
  for (double x : b) total += x * x;
  // Columns below this squared norm are numerically zero; rotating them
  // against the rest only churns rounding noise.
  const double negligible = 1e-30 * total;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = col_dot(b, p, p);
        const double beta = col_dot(b, q, q);
        const double gamma = col_dot(b, p, q);
        if (gamma == 0.0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
        if (std::min(alpha, beta) <= negligible) continue;
        converged = false;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (auto* m : {&b, &v}) {
          for (std::size_t k = 0; k < n; ++k) {
            const double xp = (*m)[k * n + p];
            const double xq = (*m)[k * n + q];
            (*m)[k * n + p] = c * xp - s * xq;
            (*m)[k * n + q] = s * xp + c * xq;
          }
        }
      }
    }
  }
  if (!converged) throw Error(ErrorCode::NoConvergence, "one-sided Jacobi SVD");

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(col_dot(b, j, j));
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  const double smax = n ? sigma[idx[0]] : 0.0;
  Svd out{Matrix(n, n), std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = idx[k];
    out.sigma[k] = sigma[j];
    const bool usable = sigma[j] > 1e-13 * std::max(smax, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      out.v(i, k) = v[i * n + j];
      out.u(i, k) = usable ? b[i * n + j] / sigma[j] : 0.0;
    }
  }
  out.u = orthonormalize_columns(out.u);
  return out;
}

Matrix orthonormalize_columns(const Matrix& m, double drop) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Matrix q(rows, cols);
  auto project_out = [&](std::vector<Complex>& w, std::size_t upto) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < upto; ++j) {
        Complex d = 0.0;
        for (std::size_t i = 0; i < rows; ++i) d += std::conj(q(i, j)) * w[i];
        if (d == Complex(0.0)) continue;
        for (std::size_t i = 0; i < rows; ++i) w[i] -= d * q(i, j);
      }
    }
  };
  auto norm = [](const std::vector<Complex>& w) {
    double s = 0.0;
    for (const auto& z : w) s += std::norm(z);
    return std::sqrt(s);
  };
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Complex> w(rows);
    for (std::size_t i = 0; i < rows; ++i) w[i] = m(i, j);
    const double before = norm(w);
    project_out(w, j);
    double after = norm(w);
    if (before == 0.0 || after < drop * before) {
      double best = -1.0;
      std::vector<Complex> best_w;
      for (std::size_t k = 0; k < rows; ++k) {
        std::vector<Complex> e(rows, 0.0);
        e[k] = 1.0;
        project_out(e, j);
        const double r = norm(e);
        if (r > best + 1e-12) {
          best = r;
          best_w = std::move(e);
        }
      }
      w = std::move(best_w);
      after = best;
    }
    for (std::size_t i = 0; i < rows; ++i) q(i, j) = after == 1.0 ? w[i] : w[i] / after;
  }
  return q;
}

Matrix orthogonal_polar(const Matrix& m, const Tolerance& tol) {
  const Svd svd = jacobi_svd(m, tol);
  return svd.u * svd.v.transpose();
}

double principal_phase(Complex z, const Tolerance& tol) {
  double phi = std::atan2(z.imag(), z.real());
  if (phi <= -std::numbers::pi + tol.zero) phi += 2.0 * std::numbers::pi;
  return phi;
}

namespace {

// Eigenvectors of a normal matrix from its two commuting Hermitian parts; the
// skewed combination separates conjugate phase pairs in the first pass.
Matrix unitary_eigenvectors(const Matrix& u, const Tolerance& tol) {
  const Matrix h1 = (u + u.adjoint()) * Complex(0.5);
  const Matrix h2 = (u - u.adjoint()) * Complex(0.0, -0.5);
  constexpr double kSkew = 0.5772156649015329;
  return simultaneous_hermitian(h1 + h2 * Complex(kSkew), h2, tol).vectors;
}

void require_unitary(const Matrix& u, const Tolerance& tol) {
  if (!u.square() || !u.is_unitary(tol.orthogonality * std::max<double>(1.0, std::sqrt(u.rows())))) {
    throw Error(ErrorCode::NotUnitary, "matrix is not unitary within tolerance");
  }
}

}  // namespace

Matrix unitary_log(const Matrix& u, const Tolerance& tol) {
  require_unitary(u, tol);
  const std::size_t n = u.rows();
  const Matrix v = unitary_eigenvectors(u, tol);
  const Matrix d = v.adjoint() * u * v;
  std::vector<Complex> phases(n);
  for (std::size_t k = 0; k < n; ++k) phases[k] = Complex(0.0, principal_phase(d(k, k), tol));
  Matrix h = v * Matrix::diagonal(phases) * v.adjoint();
  return (h - h.adjoint()) * Complex(0.5);
}

Matrix orthogonal_log(const Matrix& k, const Tolerance& tol) {
  require_unitary(k, tol);
  if (!k.is_real(tol.zero)) throw Error(ErrorCode::NotOrthogonal, "orthogonal_log needs a real matrix");
  const std::size_t n = k.rows();
  const Matrix v = unitary_eigenvectors(k, tol);
  const Matrix d = v.adjoint() * k * v;

  Matrix log = Matrix::zeros(n, n);
  std::vector<std::size_t> flipped;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex lambda = d(j, j);
    if (std::abs(lambda + 1.0) <= tol.cluster) {
      flipped.push_back(j);
      continue;
    }
    const double phi = principal_phase(lambda, tol);
    if (phi == 0.0) continue;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        log(a, b) += Complex(0.0, phi) * v(a, j) * std::conj(v(b, j));
  }
  log = log.real_part();

  if (!flipped.empty()) {
    // Real orthonormal basis of the -1 eigenspace, paired into planes.
    Matrix candidates(n, 2 * flipped.size());
    for (std::size_t c = 0; c < flipped.size(); ++c) {
      for (std::size_t a = 0; a < n; ++a) {
        candidates(a, 2 * c) = v(a, flipped[c]).real();
        candidates(a, 2 * c + 1) = v(a, flipped[c]).imag();
      }
    }
    std::vector<std::vector<double>> basis;
    for (std::size_t c = 0; c < candidates.cols() && basis.size() < flipped.size(); ++c) {
      std::vector<double> w(n);
      for (std::size_t a = 0; a < n; ++a) w[a] = candidates(a, c).real();
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : basis) {
          const double dot = std::inner_product(q.begin(), q.end(), w.begin(), 0.0);
          for (std::size_t a = 0; a < n; ++a) w[a] -= dot * q[a];
        }
      const double nrm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
      if (nrm < 0.3) continue;
      for (auto& x : w) x /= nrm;
      basis.push_back(std::move(w));
    }
    if (basis.size() != flipped.size() || basis.size() % 2 != 0) {
      throw Error(ErrorCode::NotOrthogonal, "orthogonal_log needs determinant +1");
    }
    for (std::size_t c = 0; c < basis.size(); c += 2) {
      const auto& x = basis[c];
      const auto& y = basis[c + 1];
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          log(a, b) += std::numbers::pi * (y[a] * x[b] - x[a] * y[b]);
    }
  }
  return (log - log.transpose()) * Complex(0.5);
}

Matrix expm(const Matrix& a) {
  const std::size_t n = a.rows();
  const double norm = a.frobenius_norm();
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const Matrix scaled = a * Complex(std::ldexp(1.0, -squarings));
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled * Complex(1.0 / k);
    result += term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Matrix random_unitary(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  return orthonormalize_columns(g, 1e-8);
}

Matrix random_special_orthogonal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gauss(rng);
  Matrix q = orthonormalize_columns(g, 1e-8);
  if (determinant_real(q) < 0.0)
    for (std::size_t i = 0; i < n; ++i) q(i, 0) = -q(i, 0);
  return q;
}

}  // namespace bicartan
