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

#include "bicartan/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "bicartan/error.hpp"

namespace bicartan {

namespace {

std::string pair_label(std::size_t m, std::size_t n) {
  if (m < 10 && n < 10) return std::to_string(m) + std::to_string(n);
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

struct Entry {
  std::size_t row, col;
  double value;
};

std::vector<Entry> nonzeros(const LocalElement& e) {
  const std::size_t a = e.m - 1, b = e.n - 1;
  switch (e.type) {
    case LocalType::E: return {{a, a, 1.0}};
    case LocalType::O: return {{a, b, 1.0}, {b, a, 1.0}};
    case LocalType::D: return {{a, b, 1.0}, {b, a, -1.0}};
  }
  return {};
}

double norm2(const LocalElement& e) { return e.type == LocalType::E ? 1.0 : 2.0; }

void require_shape(const Matrix& h, const BipartiteShape& shape) {
  shape.validate();
  if (!h.square() || h.rows() != shape.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "generator size does not match the shape");
  }
}

double presence_threshold(const Matrix& h, const Tolerance& tol) {
  return tol.zero * std::max(1.0, h.frobenius_norm());
}

}  // namespace

std::string LocalElement::label() const {
  switch (type) {
    case LocalType::E: return "E" + pair_label(m, n);
    case LocalType::O: return "O" + pair_label(m, n);
    case LocalType::D: return "D" + pair_label(m, n);
  }
  return "?";
}

std::vector<LocalElement> local_basis(std::size_t d) {
  std::vector<LocalElement> out;
  for (std::size_t j = 1; j <= d; ++j) out.push_back({LocalType::E, j, j, elementary(d, j, j)});
  for (std::size_t m = 1; m <= d; ++m)
    for (std::size_t n = m + 1; n <= d; ++n) out.push_back({LocalType::O, m, n, omega(d, m, n)});
  for (std::size_t m = 1; m <= d; ++m)
    for (std::size_t n = m + 1; n <= d; ++n) out.push_back({LocalType::D, m, n, delta(d, m, n)});
  return out;
}

Matrix GeneratorCoefficients::reassemble() const {
  const auto b1 = local_basis(shape.d1);
  const auto b2 = local_basis(shape.d2);
  Matrix m(shape.dimension(), shape.dimension());
  for (const auto& t : terms) m += kron(b1[t.index1].matrix, b2[t.index2].matrix) * t.coefficient;
  return m;
}

GeneratorCoefficients tensor_expand(const Matrix& h, const BipartiteShape& shape, const Tolerance& tol) {
  require_shape(h, shape);
  if (!h.is_skew_hermitian(presence_threshold(h, tol))) {
    throw Error(ErrorCode::NotSkewHermitian, "generator is not skew-Hermitian");
  }
  const auto b1 = local_basis(shape.d1);
  const auto b2 = local_basis(shape.d2);
  const std::size_t d2 = shape.d2;
  GeneratorCoefficients out;
  out.shape = shape;
  for (std::size_t i = 0; i < b1.size(); ++i) {
    const auto nz1 = nonzeros(b1[i]);
    for (std::size_t j = 0; j < b2.size(); ++j) {
      Complex c = 0.0;
      for (const auto& x : nz1)
        for (const auto& y : nonzeros(b2[j])) c += x.value * y.value * h(x.row * d2 + y.row, x.col * d2 + y.col);
      c /= norm2(b1[i]) * norm2(b2[j]);
      if (std::abs(c) > tol.zero) out.terms.push_back({i, j, c});
    }
  }
  out.residual = frobenius_distance(out.reassemble(), h);
  return out;
}

Matrix nonlocal_part(const Matrix& h, const BipartiteShape& shape) {
  require_shape(h, shape);
  const std::size_t d1 = shape.d1, d2 = shape.d2;
  Matrix t2(d1, d1), t1(d2, d2);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d1; ++b)
      for (std::size_t k = 0; k < d2; ++k) t2(a, b) += h(a * d2 + k, b * d2 + k);
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t b = 0; b < d2; ++b)
      for (std::size_t j = 0; j < d1; ++j) t1(a, b) += h(j * d2 + a, j * d2 + b);
  const double dd1 = static_cast<double>(d1), dd2 = static_cast<double>(d2);
  Matrix local = kron(t2 * (1.0 / dd2), Matrix::identity(d2)) + kron(Matrix::identity(d1), t1 * (1.0 / dd1)) -
                 Matrix::identity(d1 * d2) * (h.trace() / (dd1 * dd2));
  return h - local;
}

bool is_local(const Matrix& h, const BipartiteShape& shape, const Tolerance& tol) {
  require_shape(h, shape);
  if (!h.is_skew_hermitian(presence_threshold(h, tol))) {
    throw Error(ErrorCode::NotSkewHermitian, "generator is not skew-Hermitian");
  }
  return nonlocal_part(h, shape).max_abs() <= presence_threshold(h, tol);
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::ising: return "ising";
    case Family::fa: return "F-a";
    case Family::fb: return "F-b";
    case Family::fc: return "F-c";
    case Family::other: return "other";
  }
  return "?";
}

std::vector<FamilyComponent> family_components(const Matrix& h, const BipartiteShape& shape,
                                               const Tolerance& tol) {
  const Matrix rest = nonlocal_part(h, shape);
  const double thr = presence_threshold(h, tol);
  const auto b1 = local_basis(shape.d1);
  const auto b2 = local_basis(shape.d2);
  Tolerance fine = tol;
  fine.zero = thr;
  const GeneratorCoefficients coeffs = tensor_expand(rest, shape, fine);

  std::vector<FamilyComponent> best;
  auto offer = [&](Family f, Matrix rep, std::string label, double weight) {
    for (auto& c : best) {
      if (c.family != f) continue;
      if (weight > c.weight * (1.0 + 1e-9)) c = {f, std::move(rep), std::move(label), weight};
      return;
    }
    best.push_back({f, std::move(rep), std::move(label), weight});
  };
  auto product = [&](std::size_t i, std::size_t j) { return kron(b1[i].matrix, b2[j].matrix); };

  // Delta x Omega and Omega x Delta terms on the same index pairs.
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
  struct Pair {
    Complex x = 0.0, y = 0.0;
  };
  std::map<Key, Pair> pairs;
  const Complex i(0.0, 1.0);

  for (const auto& t : coeffs.terms) {
    const auto& e1 = b1[t.index1];
    const auto& e2 = b2[t.index2];
    const double w = std::abs(t.coefficient);
    if (w <= thr) continue;
    const std::string lab = e1.label() + "*" + e2.label();
    if (e1.type == LocalType::E && e2.type == LocalType::E) {
      offer(Family::ising, product(t.index1, t.index2) * i, "i " + lab, w);
    } else if ((e1.type == LocalType::E && e2.type == LocalType::D) ||
               (e1.type == LocalType::D && e2.type == LocalType::E)) {
      offer(Family::fa, product(t.index1, t.index2), lab, w);
    } else if ((e1.type == LocalType::D && e2.type == LocalType::O) ||
               (e1.type == LocalType::O && e2.type == LocalType::D)) {
      Pair& p = pairs[{e1.m, e1.n, e2.m, e2.n}];
      if (e1.type == LocalType::D) {
        p.x = t.coefficient;
      } else {
        p.y = t.coefficient;
      }
    } else {
      const bool imaginary = std::abs(t.coefficient.imag()) > std::abs(t.coefficient.real());
      offer(Family::other, product(t.index1, t.index2) * (imaginary ? i : Complex(1.0)),
            (imaginary ? "i " : "") + lab, w);
    }
  }

  // x D x O + y O x D = (x + y)/2 (symmetric form) + (x - y)/2 (antisymmetric
  // form); a lone product carries both.
  for (const auto& [key, p] : pairs) {
    const auto [m1, n1, m2, n2] = key;
    const std::string dxo = "D" + pair_label(m1, n1) + "*O" + pair_label(m2, n2);
    const std::string oxd = "O" + pair_label(m1, n1) + "*D" + pair_label(m2, n2);
    const Matrix d1 = delta(shape.d1, m1, n1), o1 = omega(shape.d1, m1, n1);
    const Matrix d2 = delta(shape.d2, m2, n2), o2 = omega(shape.d2, m2, n2);
    const double sym = std::abs(p.x + p.y) / 2.0;
    const double anti = std::abs(p.x - p.y) / 2.0;
    if (sym > thr) offer(Family::fb, kron(d1, o2) + kron(o1, d2), dxo + " + " + oxd, sym);
    if (anti > thr) offer(Family::fc, kron(d1, o2) - kron(o1, d2), dxo + " - " + oxd, anti);
  }

  std::sort(best.begin(), best.end(),
            [](const FamilyComponent& a, const FamilyComponent& b) { return a.family < b.family; });
  return best;
}

bool HamiltonianInventory::contains(Family family) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const InventoryEntry& e) { return e.family == family; });
}

namespace {

void require_generator(const Factor& f, std::size_t n) {
  if (f.generator.rows() != n || f.generator.cols() != n) {
    throw Error(ErrorCode::MissingGenerator,
                "factor " + std::string(to_string(f.kind)) + " has no generator of size " + std::to_string(n));
  }
}

void classify_node(Factor& f, const BipartiteShape& shape, const Tolerance& tol) {
  require_generator(f, shape.dimension());
  f.locality = is_local(f.generator, shape, tol) ? Locality::local : Locality::entangling;
  for (auto& p : f.parts) classify_node(p, shape, tol);
}

}  // namespace

void classify_tree(FactorTree& tree, const Tolerance& tol) {
  for (auto& f : tree.factors) classify_node(f, tree.shape, tol);
}

HamiltonianInventory inventory(const FactorTree& tree, const Tolerance& tol) {
  HamiltonianInventory out;
  for (const Factor* leaf : tree.leaves()) {
    require_generator(*leaf, tree.shape.dimension());
    if (is_local(leaf->generator, tree.shape, tol)) continue;
    for (auto& c : family_components(leaf->generator, tree.shape, tol)) {
      auto it = std::find_if(out.entries.begin(), out.entries.end(),
                             [&](const InventoryEntry& e) { return e.family == c.family; });
      if (it == out.entries.end()) {
        out.entries.push_back({c.family, c.label, c.representative, 1});
      } else {
        ++it->count;
      }
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const InventoryEntry& a, const InventoryEntry& b) { return a.family < b.family; });
  return out;
}

}  // namespace bicartan
