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

#include "bicartan/lie_bases.hpp"

#include <cmath>

#include "bicartan/error.hpp"

namespace bicartan {

void BipartiteShape::validate() const {
  if (d1 < 1 || d2 < 1) throw Error(ErrorCode::DimensionTooSmall, "subsystem dimensions must be >= 1");
}

void SplitPlan::validate() const {
  auto check = [](std::size_t r, std::size_t q, const char* which) {
    const bool unipartite = (r == 1 && q == 0);
    if (r < 1 || r < q || (q == 0 && !unipartite)) {
      throw Error(ErrorCode::BadSplit, std::string("subsystem ") + which +
                                           ": need r >= q >= 1 (or 1,0 for dimension 1)");
    }
  };
  check(r1, q1, "1");
  check(r2, q2, "2");
  if (q() < 1 || r() < q()) throw Error(ErrorCode::BadSplit, "induced split needs r >= q >= 1");
}

std::string to_string(const SplitPlan& s) {
  return std::to_string(s.r1) + "," + std::to_string(s.q1) + "," + std::to_string(s.r2) + "," +
         std::to_string(s.q2);
}

std::string_view to_string(BasisRole role) {
  switch (role) {
    case BasisRole::k: return "k";
    case BasisRole::p: return "p";
    case BasisRole::a: return "a";
    case BasisRole::k1: return "k'";
    case BasisRole::p1: return "p'";
    case BasisRole::a1: return "a'";
    case BasisRole::k2: return "k''";
    case BasisRole::p2: return "p''";
    case BasisRole::a2: return "a''";
    case BasisRole::s1: return "s1";
    case BasisRole::s2: return "s2";
  }
  return "?";
}

Matrix elementary(std::size_t n, std::size_t m, std::size_t k) {
  if (m < 1 || k < 1 || m > n || k > n) {
    throw Error(ErrorCode::IndexOutOfRange, "elementary matrix index outside 1.." + std::to_string(n));
  }
  Matrix e(n, n);
  e(m - 1, k - 1) = 1.0;
  return e;
}

Matrix delta(std::size_t n, std::size_t m, std::size_t k) {
  return elementary(n, m, k) - elementary(n, k, m);
}

Matrix omega(std::size_t n, std::size_t m, std::size_t k) {
  return elementary(n, m, k) + elementary(n, k, m);
}

Matrix pauli(Pauli which) {
  const Complex i(0.0, 1.0);
  switch (which) {
    case Pauli::x: return Matrix::real(2, 2, {0, 1, 1, 0});
    case Pauli::y: return Matrix(2, 2, {0.0, -i, i, 0.0});
    case Pauli::z: return Matrix::real(2, 2, {1, 0, 0, -1});
    case Pauli::id: return Matrix::identity(2);
  }
  return Matrix::identity(2);
}

namespace {

const Complex kI(0.0, 1.0);

std::string index_pair(std::size_t m, std::size_t n) {
  if (m < 10 && n < 10) return std::to_string(m) + std::to_string(n);
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

struct Element {
  Matrix matrix;
  std::string label;
  bool diagonal_block;  // both indices in the same block of the split
};

// Real skew family Delta_mn (m < n) of one subsystem.
std::vector<Element> skew_family(std::size_t d, std::size_t r) {
  std::vector<Element> out;
  for (std::size_t m = 1; m <= d; ++m)
    for (std::size_t n = m + 1; n <= d; ++n)
      out.push_back({delta(d, m, n), "D" + index_pair(m, n), (m <= r) == (n <= r)});
  return out;
}

// Real symmetric family: E_mm and Omega_mn (m < n), lexicographic in (m, n).
std::vector<Element> symmetric_family(std::size_t d, std::size_t r) {
  std::vector<Element> out;
  for (std::size_t m = 1; m <= d; ++m) {
    out.push_back({elementary(d, m, m), "E" + index_pair(m, m), true});
    for (std::size_t n = m + 1; n <= d; ++n)
      out.push_back({omega(d, m, n), "O" + index_pair(m, n), (m <= r) == (n <= r)});
  }
  return out;
}

enum class Part { any, diag, anti };

bool keep(const Element& e, Part part) {
  return part == Part::any || (part == Part::diag) == e.diagonal_block;
}

void append_products(SubspaceBasis& basis, const std::vector<Element>& left, Part lpart,
                     const std::vector<Element>& right, Part rpart, Complex scale) {
  for (const auto& l : left) {
    if (!keep(l, lpart)) continue;
    for (const auto& r : right) {
      if (!keep(r, rpart)) continue;
      basis.elements.push_back(kron(l.matrix, r.matrix) * scale);
      basis.labels.push_back((scale == kI ? "i " : "") + l.label + "*" + r.label);
    }
  }
}

void require_matching(const BipartiteShape& shape, const SplitPlan& split) {
  split.validate();
  if (split.shape() != shape) throw Error(ErrorCode::BadSplit, "split does not match shape");
}

}  // namespace

BipartiteSpans bipartite_spans(const BipartiteShape& shape) {
  shape.validate();
  const auto sk1 = skew_family(shape.d1, shape.d1);
  const auto sk2 = skew_family(shape.d2, shape.d2);
  const auto sy1 = symmetric_family(shape.d1, shape.d1);
  const auto sy2 = symmetric_family(shape.d2, shape.d2);
  BipartiteSpans out{{BasisRole::k, {}, {}, shape, {}},
                     {BasisRole::p, {}, {}, shape, {}},
                     {BasisRole::a, {}, {}, shape, {}}};
  append_products(out.k, sk1, Part::any, sy2, Part::any, 1.0);
  append_products(out.k, sy1, Part::any, sk2, Part::any, 1.0);
  append_products(out.p, sk1, Part::any, sk2, Part::any, kI);
  append_products(out.p, sy1, Part::any, sy2, Part::any, kI);
  for (std::size_t j = 1; j <= shape.d1; ++j)
    for (std::size_t k = 1; k <= shape.d2; ++k) {
      out.a.elements.push_back(kron(elementary(shape.d1, j, j), elementary(shape.d2, k, k)) * kI);
      out.a.labels.push_back("i E" + index_pair(j, j) + "*E" + index_pair(k, k));
    }
  return out;
}

std::vector<std::size_t> conjugacy_order(const SplitPlan& split) {
  split.validate();
  const std::size_t d1 = split.r1 + split.q1;
  const std::size_t d2 = split.r2 + split.q2;
  std::vector<std::size_t> order;
  order.reserve(d1 * d2);
  auto push_block = [&](std::size_t j0, std::size_t j1, std::size_t m0, std::size_t m1) {
    for (std::size_t j = j0; j < j1; ++j)
      for (std::size_t m = m0; m < m1; ++m) order.push_back(j * d2 + m);
  };
  push_block(0, split.r1, 0, split.r2);
  push_block(split.r1, d1, split.r2, d2);
  push_block(0, split.r1, split.r2, d2);
  push_block(split.r1, d1, 0, split.r2);
  return order;
}

Matrix conjugacy_R(const SplitPlan& split) {
  const auto order = conjugacy_order(split);
  Matrix r(order.size(), order.size());
  for (std::size_t k = 0; k < order.size(); ++k) r(k, order[k]) = 1.0;
  return r;
}

PrimeSpans prime_spans(const BipartiteShape& shape, const SplitPlan& split) {
  require_matching(shape, split);
  if (shape.d1 <= 2 && shape.d2 <= 2) {
    throw Error(ErrorCode::ShapeTooSmall, "prime_spans needs d1 > 2 or d2 > 2");
  }
  const auto sk1 = skew_family(shape.d1, split.r1);
  const auto sk2 = skew_family(shape.d2, split.r2);
  const auto sy1 = symmetric_family(shape.d1, split.r1);
  const auto sy2 = symmetric_family(shape.d2, split.r2);
  PrimeSpans out{{BasisRole::k1, {}, {}, shape, split}, {BasisRole::p1, {}, {}, shape, split}};
  append_products(out.k, sk1, Part::diag, sy2, Part::diag, 1.0);
  append_products(out.k, sy1, Part::diag, sk2, Part::diag, 1.0);
  append_products(out.k, sk1, Part::anti, sy2, Part::anti, 1.0);
  append_products(out.k, sy1, Part::anti, sk2, Part::anti, 1.0);
  append_products(out.p, sk1, Part::anti, sy2, Part::diag, 1.0);
  append_products(out.p, sk1, Part::diag, sy2, Part::anti, 1.0);
  append_products(out.p, sy1, Part::diag, sk2, Part::anti, 1.0);
  append_products(out.p, sy1, Part::anti, sk2, Part::diag, 1.0);
  return out;
}

PrimeSpans double_prime_spans(const BipartiteShape& shape, const SplitPlan& split) {
  require_matching(shape, split);
  const auto sk1 = skew_family(shape.d1, split.r1);
  const auto sk2 = skew_family(shape.d2, split.r2);
  const auto sy1 = symmetric_family(shape.d1, split.r1);
  const auto sy2 = symmetric_family(shape.d2, split.r2);
  PrimeSpans out{{BasisRole::k2, {}, {}, shape, split}, {BasisRole::p2, {}, {}, shape, split}};
  append_products(out.k, sk1, Part::diag, sy2, Part::diag, 1.0);
  append_products(out.k, sy1, Part::diag, sk2, Part::diag, 1.0);
  append_products(out.p, sk1, Part::anti, sy2, Part::anti, 1.0);
  append_products(out.p, sy1, Part::anti, sk2, Part::anti, 1.0);
  return out;
}

SubspaceBasis cartan_a_prime(const SplitPlan& split) {
  split.validate();
  const BipartiteShape shape = split.shape();
  SubspaceBasis out{BasisRole::a1, {}, {}, shape, split};
  for (std::size_t j = 1; j <= shape.d1; ++j)
    for (std::size_t k = 1; k <= split.q2; ++k) {
      out.elements.push_back(kron(elementary(shape.d1, j, j), delta(shape.d2, k, split.r2 + k)));
      out.labels.push_back("E" + index_pair(j, j) + "*D" + index_pair(k, split.r2 + k));
    }
  for (std::size_t l = split.q2 + 1; l <= split.r2; ++l)
    for (std::size_t f = 1; f <= split.q1; ++f) {
      out.elements.push_back(kron(delta(shape.d1, f, split.r1 + f), elementary(shape.d2, l, l)));
      out.labels.push_back("D" + index_pair(f, split.r1 + f) + "*E" + index_pair(l, l));
    }
  return out;
}

SubspaceBasis cartan_a_dprime(const SplitPlan& split) {
  split.validate();
  const BipartiteShape shape = split.shape();
  const std::size_t d1 = shape.d1;
  const std::size_t d2 = shape.d2;
  SubspaceBasis out{BasisRole::a2, {}, {}, shape, split};
  // N family: (j, m) is the s-th pair of the r1 x r2 block, (l, n) the s-th
  // pair of the q1 x q2 block.
  for (std::size_t s = 1; s <= split.q1 * split.q2; ++s) {
    const std::size_t j = (s - 1) / split.r2 + 1;
    const std::size_t m = (s - 1) % split.r2 + 1;
    const std::size_t l = (s - 1) / split.q2 + 1;
    const std::size_t n = (s - 1) % split.q2 + 1;
    const std::size_t a = j, b = split.r1 + l, c = m, e = split.r2 + n;
    out.elements.push_back(kron(delta(d1, a, b), omega(d2, c, e)) + kron(omega(d1, a, b), delta(d2, c, e)));
    out.labels.push_back("D" + index_pair(a, b) + "*O" + index_pair(c, e) + " + O" + index_pair(a, b) +
                         "*D" + index_pair(c, e));
  }
  // M family: (j, n) is the s-th pair of r1 x q2, (l, m) the s-th of q1 x r2.
  const std::size_t rank_m = std::min(split.r1 * split.q2, split.q1 * split.r2);
  for (std::size_t s = 1; s <= rank_m; ++s) {
    const std::size_t j = (s - 1) / split.q2 + 1;
    const std::size_t n = (s - 1) % split.q2 + 1;
    const std::size_t l = (s - 1) / split.r2 + 1;
    const std::size_t m = (s - 1) % split.r2 + 1;
    const std::size_t a = j, b = split.r1 + l, c = m, e = split.r2 + n;
    out.elements.push_back(kron(delta(d1, a, b), omega(d2, c, e)) - kron(omega(d1, a, b), delta(d2, c, e)));
    out.labels.push_back("D" + index_pair(a, b) + "*O" + index_pair(c, e) + " - O" + index_pair(a, b) +
                         "*D" + index_pair(c, e));
  }
  return out;
}

std::vector<Complex> project_coefficients(const Matrix& m, const SubspaceBasis& basis) {
  std::vector<Complex> coeffs;
  coeffs.reserve(basis.size());
  for (const auto& b : basis.elements) {
    const double nb = trace_inner(b, b).real();
    coeffs.push_back(nb == 0.0 ? Complex(0.0) : trace_inner(m, b) / nb);
  }
  return coeffs;
}

double projection_residual(const Matrix& m, const SubspaceBasis& basis) {
  Matrix rest = m;
  const auto coeffs = project_coefficients(m, basis);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] != Complex(0.0)) rest -= basis.elements[k] * coeffs[k];
  }
  return rest.frobenius_norm();
}

}  // namespace bicartan
