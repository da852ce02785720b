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

#include "bicartan/bdi_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bicartan/error.hpp"

namespace bicartan {

namespace {

std::vector<double> column(const Matrix& m, std::size_t j) {
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m(i, j).real();
  return out;
}

void set_column(Matrix& m, std::size_t j, const std::vector<double>& v, double scale = 1.0) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = v[i] * scale;
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void negate_column(Matrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

void negate_row(Matrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// Parity of a permutation given as image[k] (values are a permutation of the
// same index set).
bool is_odd(std::vector<std::size_t> image) {
  std::vector<std::size_t> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  for (auto& x : image) x = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
  std::vector<bool> seen(image.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0;
    for (std::size_t x = k; !seen[x]; x = image[x]) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 1;
}

// Orthonormal completion that keeps the known columns in place and fills the
// others from the orthogonal complement.
Matrix complete_columns(const Matrix& m, const std::vector<bool>& known) {
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (known[j]) order.push_back(j);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!known[j]) order.push_back(j);
  Matrix packed(m.rows(), m.cols());
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) packed(i, k) = m(i, order[k]);
  packed = orthonormalize_columns(packed);
  Matrix out(m.rows(), m.cols());
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, order[k]) = packed(i, k).real();
  return out;
}

}  // namespace

Matrix assemble_torus(std::size_t r, std::size_t q, std::span<const double> c,
                      std::span<const double> s) {
  Matrix a = Matrix::identity(r + q);
  for (std::size_t i = 0; i < q; ++i) {
    const std::size_t top = r - q + i;
    const std::size_t bottom = r + i;
    a(top, top) = c[i];
    a(top, bottom) = s[i];
    a(bottom, top) = -s[i];
    a(bottom, bottom) = c[i];
  }
  return a;
}

Matrix BlockKAK::torus() const {
  std::vector<double> c(q), s(q);
  for (std::size_t i = 0; i < q; ++i) {
    c[i] = C(i, i).real();
    s[i] = S(i, i).real();
  }
  return assemble_torus(r, q, c, s);
}

Matrix BlockKAK::torus_generator() const {
  Matrix g(r + q, r + q);
  for (std::size_t i = 0; i < q; ++i) {
    g(r - q + i, r + i) = angles[i];
    g(r + i, r - q + i) = -angles[i];
  }
  return g;
}

BlockKAK bdi_decompose(const Matrix& xt, std::size_t r, std::size_t q, const Tolerance& tol) {
  const std::size_t n = xt.rows();
  if (!xt.square() || q < 1 || r < q || r + q != n) {
    throw Error(ErrorCode::BadSplit, "block sizes r=" + std::to_string(r) + ", q=" + std::to_string(q) +
                                         " do not fit a " + std::to_string(n) + "x" +
                                         std::to_string(xt.cols()) + " matrix");
  }
  if (!xt.is_orthogonal(tol.orthogonality * static_cast<double>(n))) {
    throw Error(ErrorCode::NotOrthogonal, "BDI input is not real orthogonal");
  }
  const Matrix x = xt.real_part();
  const Matrix q11 = x.block(0, 0, r, r);
  const Matrix q12 = x.block(0, r, r, q);
  const Matrix q21 = x.block(r, 0, q, r);
  const Matrix q22 = x.block(r, r, q, q);
  const std::size_t lead = r - q;

  // Right vectors from the SVD of the cosine block. Where the cosine is large
  // the sine is better resolved by the lower block, so those columns are
  // re-diagonalized against it (smallest sine first).
  Svd svd = jacobi_svd(q11, tol);
  Matrix u = svd.u;
  Matrix v = svd.v;
  std::size_t big = 0;
  while (big < r && svd.sigma[big] > std::numbers::sqrt2 / 2.0) ++big;
  big = std::max(big, lead);
  if (big > 0) {
    Matrix vb = v.block(0, 0, r, big);
    const Matrix wb = q21 * vb;
    Matrix gram = wb.transpose() * wb;
    gram = (gram + gram.transpose()) * 0.5;
    const EigenSystem eig = jacobi_eigh(gram, tol);
    std::vector<std::size_t> order(big);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return eig.values[a] < eig.values[b]; });
    Matrix z(big, big);
    for (std::size_t k = 0; k < big; ++k)
      for (std::size_t i = 0; i < big; ++i) z(i, k) = eig.vectors(i, order[k]);
    vb = vb * z;
    v.set_block(0, 0, vb);
    for (std::size_t k = 0; k < big; ++k) {
      const auto col = column(q11 * vb, k);
      set_column(u, k, col, 1.0 / norm(col));
    }
  }
  const Matrix k11 = orthonormalize_columns(u).real_part();
  const Matrix v1 = orthonormalize_columns(v).real_part();

  const Matrix w = q21 * v1;
  const Matrix cq = q11 * v1;
  std::vector<double> c(q), s(q);
  Matrix k12(q, q);
  std::vector<bool> known(q, false);
  for (std::size_t i = 0; i < q; ++i) {
    const auto wc = column(w, lead + i);
    s[i] = norm(wc);
    c[i] = norm(column(cq, lead + i));
    known[i] = s[i] > tol.zero;
    if (known[i]) set_column(k12, i, wc, -1.0 / s[i]);
  }
  k12 = complete_columns(k12, known);

  // Rows of K22 from both block equations, weighted by cosine and sine.
  const Matrix zt = k11.transpose() * q12;
  const Matrix yt = k12.transpose() * q22;
  Matrix k22(q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) k22(i, j) = c[i] * yt(i, j) + s[i] * zt(lead + i, j);
  k22 = orthogonal_polar(k22, tol).real_part();

  BlockKAK out;
  out.r = r;
  out.q = q;
  out.K11 = k11;
  out.K12 = k12;
  out.K21 = v1.transpose();
  out.K22 = k22;

  // Sign moves that keep the cosine-sine shape while fixing determinants.
  if (determinant_real(out.K11) < 0.0) {
    negate_column(out.K11, lead);
    negate_row(out.K22, 0);
  }
  if (determinant_real(out.K12) < 0.0) {
    negate_column(out.K12, 0);
    negate_row(out.K21, lead);
  }
  if (determinant_real(out.K21) < 0.0 && determinant_real(out.K22) < 0.0) {
    if (lead > 0) {
      negate_column(out.K11, 0);
      negate_row(out.K21, 0);
      negate_column(out.K11, lead);
      negate_row(out.K22, 0);
    } else {
      negate_row(out.K21, q - 1);
      negate_row(out.K22, q - 1);
    }
  }

  const Matrix m = out.left().transpose() * x * out.right().transpose();
  out.angles.resize(q);
  for (std::size_t i = 0; i < q; ++i) {
    const double ci = m(lead + i, lead + i).real();
    const double si = m(lead + i, r + i).real();
    const double h = std::hypot(ci, si);
    c[i] = h > 0.0 ? ci / h : 1.0;
    s[i] = h > 0.0 ? si / h : 0.0;
    out.angles[i] = std::atan2(s[i], c[i]);
  }
  out.C = Matrix::diagonal(std::span<const double>(c));
  out.S = Matrix::diagonal(std::span<const double>(s));
  out.P = Matrix::identity(r);
  out.P.set_block(lead, lead, out.C);
  out.Q = Matrix(r, q);
  out.Q.set_block(lead, 0, out.S);

  const Matrix a = out.torus();
  const double off = frobenius_distance(m, a);
  const double residual = frobenius_distance(out.left() * a * out.right(), x);
  const double limit = tol.reconstruction * static_cast<double>(n);
  if (off > limit || residual > limit) {
    throw Error(ErrorCode::SignReconciliationFailure,
                "cosine-sine blocks inconsistent: best residual " + format_residual(std::max(off, residual)));
  }
  return out;
}

PlanePair plane_pair(const Matrix& element, std::size_t r, const Tolerance& tol) {
  std::vector<std::pair<std::size_t, std::size_t>> nz;
  for (std::size_t i = 0; i < element.rows(); ++i)
    for (std::size_t j = 0; j < element.cols(); ++j)
      if (std::abs(element(i, j)) > tol.zero) nz.emplace_back(i, j);
  if (nz.size() != 2) throw Error(ErrorCode::NotInSpan, "torus element is not a single rotation plane");
  auto [t, u] = nz[0];
  const Complex v = element(t, u);
  if (nz[1] != std::make_pair(u, t) || std::abs(v.imag()) > tol.zero ||
      std::abs(element(u, t) + v) > tol.zero) {
    throw Error(ErrorCode::NotInSpan, "torus element is not a single rotation plane");
  }
  PlanePair p{t, u, v.real()};
  if (p.t >= r) p = {u, t, -v.real()};
  if (p.t >= r || p.u < r) throw Error(ErrorCode::NotInSpan, "rotation plane does not cross the blocks");
  return p;
}

AlignedTorus align_torus(const BlockKAK& kak, const std::vector<PlanePair>& targets) {
  const std::size_t r = kak.r;
  const std::size_t q = kak.q;
  const std::size_t n = r + q;
  if (targets.size() != q) {
    throw Error(ErrorCode::NotInSpan, "expected " + std::to_string(q) + " torus directions, got " +
                                          std::to_string(targets.size()));
  }
  std::vector<std::size_t> image(n, n);
  std::vector<bool> taken(n, false);
  for (std::size_t i = 0; i < q; ++i) {
    const auto& p = targets[i];
    if (p.t >= r || p.u < r || p.u >= n || taken[p.t] || taken[p.u]) {
      throw Error(ErrorCode::NotInSpan, "torus directions overlap or leave the blocks");
    }
    image[r - q + i] = p.t;
    image[r + i] = p.u;
    taken[p.t] = taken[p.u] = true;
  }
  auto fill = [&](std::size_t lo, std::size_t hi) {
    std::size_t next = lo;
    for (std::size_t x = lo; x < hi; ++x) {
      if (image[x] != n) continue;
      while (taken[next]) ++next;
      image[x] = next;
      taken[next] = true;
    }
  };
  fill(0, r);
  fill(r, n);

  std::vector<double> sign(n, 1.0);
  double flip = 1.0;
  if (is_odd(std::vector<std::size_t>(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(r)))) {
    sign[r - q] = -1.0;
    flip = -flip;
  }
  if (is_odd(std::vector<std::size_t>(image.begin() + static_cast<std::ptrdiff_t>(r), image.end()))) {
    sign[r] = -1.0;
    flip = -flip;
  }
  Matrix pi(n, n);
  for (std::size_t x = 0; x < n; ++x) pi(image[x], x) = sign[x];

  AlignedTorus out;
  out.K1 = kak.left() * pi.transpose();
  out.A = pi * kak.torus() * pi.transpose();
  out.K2 = pi * kak.right();
  out.coefficients.resize(q);
  for (std::size_t i = 0; i < q; ++i) {
    out.coefficients[i] = kak.angles[i] / targets[i].v * (i == 0 ? flip : 1.0);
  }
  return out;
}

}  // namespace bicartan
