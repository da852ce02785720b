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

#include "bicartan/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bicartan/ai_decomposition.hpp"
#include "bicartan/bdi_decomposition.hpp"
#include "bicartan/error.hpp"

namespace bicartan {

std::string_view to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::ai_k: return "AI-K";
    case FactorKind::ai_a: return "AI-A";
    case FactorKind::bdi_k: return "BDI-K";
    case FactorKind::bdi_a: return "BDI-A";
    case FactorKind::euler_l: return "Euler-L";
    case FactorKind::euler_n: return "Euler-N";
    case FactorKind::so4_s1: return "SO4-s1";
    case FactorKind::so4_s2: return "SO4-s2";
    case FactorKind::terminal_so2: return "terminal-SO2";
  }
  return "?";
}

std::string_view to_string(Locality locality) {
  switch (locality) {
    case Locality::unknown: return "unknown";
    case Locality::local: return "local";
    case Locality::entangling: return "entangling";
  }
  return "?";
}

std::string SplitStrategy::name() const {
  if (levels.empty()) return "balanced";
  std::string out = "explicit";
  for (const auto& p : levels) out += ":" + to_string(p);
  return out;
}

std::pair<std::size_t, std::size_t> choose_split(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "a split needs dimension >= 2");
  return {(d + 1) / 2, d / 2};
}

SplitPlan plan_for(const BipartiteShape& shape, std::size_t level, const SplitStrategy& strategy) {
  if (level >= 1 && level <= strategy.levels.size()) {
    const SplitPlan& p = strategy.levels[level - 1];
    if (p.shape() == shape) {
      p.validate();
      return p;
    }
  }
  auto side = [](std::size_t d) {
    return d == 1 ? std::pair<std::size_t, std::size_t>{1, 0} : choose_split(d);
  };
  const auto [r1, q1] = side(shape.d1);
  const auto [r2, q2] = side(shape.d2);
  SplitPlan plan{r1, q1, r2, q2};
  plan.validate();
  return plan;
}

std::vector<Matrix> so4_directions(BasisRole which) {
  const Matrix iy = pauli(Pauli::y) * Complex(0.0, 1.0);  // real [[0,1],[-1,0]]
  const Matrix id = Matrix::identity(2);
  const Matrix x = pauli(Pauli::x);
  const Matrix y = pauli(Pauli::y);
  const Matrix z = pauli(Pauli::z);
  const Complex i(0.0, 1.0);
  if (which == BasisRole::s1) return {kron(iy, id), kron(x * i, y), kron(z * i, y)};
  if (which == BasisRole::s2) return {kron(id, iy), kron(y * i, x), kron(y * i, z)};
  throw Error(ErrorCode::NotInSubgroup, "so(4) splits only into s1 and s2");
}

namespace {

constexpr double kPi = 3.14159265358979323846;

Matrix plane_generator(std::size_t n, std::size_t a, std::size_t b, double angle) {
  Matrix g(n, n);
  g(a, b) = angle;
  g(b, a) = -angle;
  return g;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Quaternion coordinates (1, e1, e2, e3) of F against a direction set.
std::vector<double> quaternion(const Matrix& f, const std::vector<Matrix>& e) {
  std::vector<double> out(4);
  out[0] = f.trace().real() / 4.0;
  for (std::size_t k = 0; k < 3; ++k) out[k + 1] = trace_inner(f, e[k]).real() / 4.0;
  return out;
}

Matrix from_quaternion(const std::vector<double>& p, const std::vector<Matrix>& e) {
  Matrix m = Matrix::identity(4) * p[0];
  for (std::size_t k = 0; k < 3; ++k) m += e[k] * p[k + 1];
  return m;
}

Factor leaf(FactorKind kind, Matrix matrix, Matrix generator, std::size_t level,
            const BipartiteShape& shape) {
  Factor f;
  f.kind = kind;
  f.matrix = std::move(matrix);
  f.generator = std::move(generator);
  f.level = level;
  f.support = iota(f.matrix.rows());
  f.block_shape = shape;
  return f;
}

Factor lift(const Factor& f, std::span<const std::size_t> index, std::size_t n) {
  Factor out = f;
  out.matrix = embed(f.matrix, index, n, true);
  out.generator = embed(f.generator, index, n, false);
  for (auto& s : out.support) s = index[s];
  for (auto& p : out.parts) p = lift(p, index, n);
  return out;
}

// Lifts a factor of one subsystem to the whole space (A x 1 or 1 x A).
Factor lift_subsystem(const Factor& f, int which, const BipartiteShape& shape) {
  Factor out = f;
  const Matrix i1 = Matrix::identity(shape.d1);
  const Matrix i2 = Matrix::identity(shape.d2);
  out.matrix = which == 1 ? kron(f.matrix, i2) : kron(i1, f.matrix);
  out.generator = which == 1 ? kron(f.generator, i2) : kron(i1, f.generator);
  out.split.reset();
  out.support.clear();
  for (std::size_t j = 0; j < shape.d1; ++j)
    for (std::size_t k = 0; k < shape.d2; ++k) {
      const std::size_t local = which == 1 ? j : k;
      if (std::find(f.support.begin(), f.support.end(), local) != f.support.end()) {
        out.support.push_back(j * shape.d2 + k);
      }
    }
  for (auto& p : out.parts) p = lift_subsystem(p, which, shape);
  return out;
}

Matrix generator_sum(const std::vector<double>& coeffs, const std::vector<Matrix>& basis, std::size_t n) {
  Matrix g(n, n);
  for (std::size_t k = 0; k < coeffs.size(); ++k) g += basis[k] * coeffs[k];
  return g;
}

std::vector<Factor> so4_factors(const Matrix& k, std::size_t level, const Tolerance& tol) {
  const auto [f1, f2] = so4_split(k, tol);
  std::vector<Factor> out;
  const std::pair<BasisRole, FactorKind> sides[] = {{BasisRole::s1, FactorKind::so4_s1},
                                                   {BasisRole::s2, FactorKind::so4_s2}};
  for (const auto& [role, kind] : sides) {
    const Matrix& f = role == BasisRole::s1 ? f1 : f2;
    const auto e = so4_directions(role);
    const EulerFactors eu = euler_so3(f, role, tol);
    Factor node = leaf(kind, f, Matrix(4, 4), level, {2, 2});
    node.parts.push_back(leaf(FactorKind::euler_l, eu.L1, e[0] * eu.alpha1, level, {2, 2}));
    node.parts.push_back(leaf(FactorKind::euler_n, eu.N, e[1] * eu.beta, level, {2, 2}));
    node.parts.push_back(leaf(FactorKind::euler_l, eu.L2, e[0] * eu.alpha2, level, {2, 2}));
    node.generator = orthogonal_log(f, tol);
    out.push_back(std::move(node));
  }
  return out;
}

std::vector<Factor> so3_factors(const Matrix& k, const BipartiteShape& shape, std::size_t level,
                                const Tolerance& tol) {
  const EulerFactors eu = euler_rotation3(k, tol);
  return {leaf(FactorKind::euler_l, eu.L1, plane_generator(3, 0, 1, eu.alpha1), level, shape),
          leaf(FactorKind::euler_n, eu.N, plane_generator(3, 1, 2, eu.beta), level, shape),
          leaf(FactorKind::euler_l, eu.L2, plane_generator(3, 0, 1, eu.alpha2), level, shape)};
}

struct SubResult {
  Matrix left, torus, right;
  std::vector<double> coefficients;
};

// BDI of one diagonal block of the first-stage K factor, torus aligned to
// the given elements (already in the block's coordinates).
SubResult sub_bdi(const Matrix& u, std::size_t r, std::size_t q, const std::vector<Matrix>& targets,
                  const Tolerance& tol) {
  if (q == 0) return {u, Matrix::identity(u.rows()), Matrix::identity(u.rows()), {}};
  const BlockKAK kak = bdi_decompose(u, r, q, tol);
  std::vector<PlanePair> pairs;
  for (const auto& t : targets) pairs.push_back(plane_pair(t, r, tol));
  AlignedTorus al = align_torus(kak, pairs);
  return {al.K1, al.A, al.K2, al.coefficients};
}

}  // namespace

std::pair<Matrix, Matrix> so4_split(const Matrix& k, const Tolerance& tol) {
  if (k.rows() != 4 || !k.is_orthogonal(tol.orthogonality * 4.0)) {
    throw Error(ErrorCode::NotInSpan, "so4_split needs a real orthogonal 4x4 matrix");
  }
  const auto e = so4_directions(BasisRole::s1);
  const auto g = so4_directions(BasisRole::s2);
  std::vector<Matrix> ee{Matrix::identity(4), e[0], e[1], e[2]};
  std::vector<Matrix> gg{Matrix::identity(4), g[0], g[1], g[2]};
  // K = (sum p_i e_i)(sum q_j g_j), so <K, e_i g_j> / 4 = p_i q_j.
  double m[4][4];
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      m[i][j] = trace_inner(k, ee[i] * gg[j]).real() / 4.0;
      if (std::abs(m[i][j]) > std::abs(m[bi][bj])) {
        bi = i;
        bj = j;
      }
    }
  std::vector<double> p(4), qv(4);
  double pn = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    p[i] = m[i][bj];
    pn += p[i] * p[i];
  }
  pn = std::sqrt(pn);
  for (auto& x : p) x /= pn;
  for (std::size_t j = 0; j < 4; ++j) {
    qv[j] = 0.0;
    for (std::size_t i = 0; i < 4; ++i) qv[j] += p[i] * m[i][j];
  }
  double off = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) off = std::max(off, std::abs(m[i][j] - p[i] * qv[j]));
  Matrix f1 = from_quaternion(p, e);
  Matrix f2 = from_quaternion(qv, g);
  const double residual = frobenius_distance(f1 * f2, k);
  if (off > std::sqrt(tol.reconstruction) || residual > tol.reconstruction * 4.0) {
    throw Error(ErrorCode::NotInSpan, "matrix is not generated by s1 + s2 (residual " +
                                          format_residual(std::max(off, residual)) + ")");
  }
  f1 = orthogonal_polar(f1, tol);
  f2 = orthogonal_polar(f2, tol);
  return {f1, f2};
}

EulerFactors euler_so3(const Matrix& f, BasisRole which, const Tolerance& tol) {
  const auto e = so4_directions(which);
  if (f.rows() != 4) throw Error(ErrorCode::NotInSubgroup, "expected a 4x4 matrix");
  auto qv = quaternion(f, e);
  const double norm = std::sqrt(qv[0] * qv[0] + qv[1] * qv[1] + qv[2] * qv[2] + qv[3] * qv[3]);
  if (frobenius_distance(from_quaternion(qv, e), f) > std::sqrt(tol.reconstruction) ||
      std::abs(norm - 1.0) > std::sqrt(tol.reconstruction)) {
    throw Error(ErrorCode::NotInSubgroup, "matrix is not in the " + std::string(to_string(which)) +
                                              " subgroup");
  }
  for (auto& x : qv) x /= norm;
  // F = cos(b) (cos(a1 + a2) + sin(a1 + a2) e1) + sin(b) (cos(a1 - a2) e2 + sin(a1 - a2) e3).
  const double cb = std::hypot(qv[0], qv[1]);
  const double sb = std::hypot(qv[2], qv[3]);
  EulerFactors out;
  out.beta = std::atan2(sb, cb);
  const double degenerate = tol.cluster;
  if (sb <= degenerate) {
    out.alpha1 = std::atan2(qv[1], qv[0]);
    out.alpha2 = 0.0;
  } else if (cb <= degenerate) {
    out.alpha1 = std::atan2(qv[3], qv[2]);
    out.alpha2 = 0.0;
  } else {
    const double sum = std::atan2(qv[1], qv[0]);
    const double diff = std::atan2(qv[3], qv[2]);
    out.alpha1 = (sum + diff) / 2.0;
    out.alpha2 = (sum - diff) / 2.0;
  }
  const Matrix id = Matrix::identity(4);
  out.L1 = id * std::cos(out.alpha1) + e[0] * std::sin(out.alpha1);
  out.N = id * std::cos(out.beta) + e[1] * std::sin(out.beta);
  out.L2 = id * std::cos(out.alpha2) + e[0] * std::sin(out.alpha2);
  const double residual = frobenius_distance(out.L1 * out.N * out.L2, f);
  if (residual > tol.reconstruction * 4.0) {
    throw Error(ErrorCode::NotInSubgroup, "Euler factors miss by " + format_residual(residual));
  }
  return out;
}

EulerFactors euler_rotation3(const Matrix& k, const Tolerance& tol) {
  if (k.rows() != 3 || !k.is_orthogonal(tol.orthogonality * 3.0) || determinant_real(k) < 0.0) {
    throw Error(ErrorCode::NotOrthogonal, "expected an element of SO(3)");
  }
  auto at = [&](std::size_t i, std::size_t j) { return k(i, j).real(); };
  EulerFactors out;
  const double sb = std::hypot(at(0, 2), at(1, 2));
  out.beta = std::atan2(sb, at(2, 2));
  if (sb <= tol.cluster) {
    out.alpha2 = 0.0;
    out.alpha1 = at(2, 2) > 0.0 ? std::atan2(at(0, 1), at(0, 0)) : std::atan2(-at(0, 1), at(0, 0));
  } else {
    out.alpha1 = std::atan2(at(0, 2), at(1, 2));
    out.alpha2 = std::atan2(at(2, 0), -at(2, 1));
  }
  out.L1 = expm(plane_generator(3, 0, 1, out.alpha1)).real_part();
  out.N = expm(plane_generator(3, 1, 2, out.beta)).real_part();
  out.L2 = expm(plane_generator(3, 0, 1, out.alpha2)).real_part();
  const double residual = frobenius_distance(out.L1 * out.N * out.L2, k);
  if (residual > tol.reconstruction * 3.0) {
    throw Error(ErrorCode::ReconstructionFailure, "SO(3) Euler factors miss by " + format_residual(residual));
  }
  return out;
}

std::vector<Factor> decompose_orthogonal(const Matrix& k, const BipartiteShape& shape,
                                         std::size_t level, const SplitStrategy& strategy,
                                         const Tolerance& tol) {
  const std::size_t n = shape.dimension();
  if (k.rows() != n) throw Error(ErrorCode::DimensionMismatch, "block does not match its shape");
  if (n == 1) return {};
  if (n == 2) {
    const double theta = std::atan2(k(0, 1).real(), k(0, 0).real());
    return {leaf(FactorKind::terminal_so2, k, plane_generator(2, 0, 1, theta), level, shape)};
  }
  if (shape == BipartiteShape{2, 2}) return so4_factors(k, level, tol);
  if (n == 3) return so3_factors(k, shape, level, tol);

  const SplitPlan plan = plan_for(shape, level, strategy);
  const std::vector<std::size_t> order = conjugacy_order(plan);
  const std::size_t r = plan.r();
  const std::size_t q = plan.q();
  const Matrix xt = permute(k, order);

  // First stage: torus aligned to the a' basis.
  const SubspaceBasis a1 = cartan_a_prime(plan);
  std::vector<PlanePair> pairs;
  for (const auto& el : a1.elements) pairs.push_back(plane_pair(permute(el, order), r, tol));
  const AlignedTorus first = align_torus(bdi_decompose(xt, r, q, tol), pairs);

  // Second stage on the four diagonal blocks.
  const std::size_t n1 = plan.r1 * plan.r2;
  const std::size_t n2 = plan.q1 * plan.q2;
  const std::size_t n3 = plan.r1 * plan.q2;
  const std::size_t n4 = plan.q1 * plan.r2;
  const SubspaceBasis a2 = cartan_a_dprime(plan);
  const std::vector<std::size_t> top(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(r));
  std::vector<std::size_t> bottom(order.begin() + static_cast<std::ptrdiff_t>(r), order.end());
  // The lower block is split with the larger group first.
  const bool swap = n3 < n4;
  std::vector<std::size_t> local_bottom(q);
  std::iota(local_bottom.begin(), local_bottom.end(), 0);
  if (swap) std::rotate(local_bottom.begin(), local_bottom.begin() + static_cast<std::ptrdiff_t>(n3), local_bottom.end());
  std::vector<std::size_t> bottom_swapped(q);
  for (std::size_t a = 0; a < q; ++a) bottom_swapped[a] = bottom[local_bottom[a]];

  std::vector<Matrix> n_targets, m_targets;
  for (std::size_t j = 0; j < a2.size(); ++j) {
    if (j < n2) n_targets.push_back(permute(a2.elements[j], top));
    else m_targets.push_back(permute(a2.elements[j], bottom_swapped));
  }
  const std::size_t rb = std::max(n3, n4);
  const std::size_t qb = std::min(n3, n4);

  struct Stage {
    Matrix left, torus, right;
    std::vector<double> coefficients;
  };
  auto second = [&](const Matrix& kk) {
    const SubResult up = sub_bdi(kk.block(0, 0, r, r), n1, n2, n_targets, tol);
    const Matrix low_in = permute(kk.block(r, r, q, q), local_bottom);
    const SubResult lo = sub_bdi(low_in, rb, qb, m_targets, tol);
    Stage s{direct_sum(up.left, unpermute(lo.left, local_bottom)),
            direct_sum(up.torus, unpermute(lo.torus, local_bottom)),
            direct_sum(up.right, unpermute(lo.right, local_bottom)), up.coefficients};
    s.coefficients.insert(s.coefficients.end(), lo.coefficients.begin(), lo.coefficients.end());
    return s;
  };
  const Stage left = second(first.K1);
  const Stage right = second(first.K2);

  // Blocks in tensor coordinates and their inherited shapes.
  const std::vector<std::size_t> blocks[4] = {
      {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n1)},
      {order.begin() + static_cast<std::ptrdiff_t>(n1), order.begin() + static_cast<std::ptrdiff_t>(r)},
      {order.begin() + static_cast<std::ptrdiff_t>(r), order.begin() + static_cast<std::ptrdiff_t>(r + n3)},
      {order.begin() + static_cast<std::ptrdiff_t>(r + n3), order.end()}};
  const BipartiteShape shapes[4] = {{plan.r1, plan.r2}, {plan.q1, plan.q2}, {plan.r1, plan.q2}, {plan.q1, plan.r2}};

  auto k_node = [&](const Matrix& conj) {
    Factor f = leaf(FactorKind::bdi_k, unpermute(conj, order), Matrix(n, n), level, shape);
    f.matrix = f.matrix.real_part();
    f.split = plan;
    for (std::size_t b = 0; b < 4; ++b) {
      if (blocks[b].empty()) continue;
      const Matrix sub = submatrix(f.matrix, blocks[b]);
      f.generator += embed(orthogonal_log(sub, tol), blocks[b], n, false);
      for (const auto& child : decompose_orthogonal(sub, shapes[b], level + 1, strategy, tol)) {
        f.parts.push_back(lift(child, blocks[b], n));
      }
    }
    return f;
  };
  auto a_node = [&](const Matrix& conj, BasisRole role, const SubspaceBasis& basis,
                    const std::vector<double>& coeffs) {
    Factor f = leaf(FactorKind::bdi_a, unpermute(conj, order).real_part(),
                    generator_sum(coeffs, basis.elements, n), level, shape);
    f.split = plan;
    f.cartan_role = role;
    f.coefficients = coeffs;
    return f;
  };

  std::vector<Factor> out;
  out.push_back(k_node(left.left));
  out.push_back(a_node(left.torus, BasisRole::a2, a2, left.coefficients));
  out.push_back(k_node(left.right));
  out.push_back(a_node(first.A, BasisRole::a1, a1, first.coefficients));
  out.push_back(k_node(right.left));
  out.push_back(a_node(right.torus, BasisRole::a2, a2, right.coefficients));
  out.push_back(k_node(right.right));
  return out;
}

std::vector<const Factor*> FactorTree::leaves() const {
  std::vector<const Factor*> out;
  auto walk = [&](auto&& self, const Factor& f) -> void {
    if (f.parts.empty()) {
      out.push_back(&f);
      return;
    }
    for (const auto& p : f.parts) self(self, p);
  };
  for (const auto& f : factors) walk(walk, f);
  return out;
}

std::vector<Factor*> FactorTree::leaves() {
  std::vector<Factor*> out;
  auto walk = [&](auto&& self, Factor& f) -> void {
    if (f.parts.empty()) {
      out.push_back(&f);
      return;
    }
    for (auto& p : f.parts) self(self, p);
  };
  for (auto& f : factors) walk(walk, f);
  return out;
}

Matrix FactorTree::product() const {
  Matrix m = Matrix::identity(input.rows());
  for (const Factor* f : leaves()) m = m * f->matrix;
  return m;
}

double FactorTree::residual() const { return frobenius_distance(product(), input); }

std::optional<std::pair<Matrix, Matrix>> split_product(const Matrix& x, const BipartiteShape& shape,
                                                       const Tolerance& tol) {
  const std::size_t d1 = shape.d1, d2 = shape.d2;
  if (x.rows() != d1 * d2 || !x.square()) return std::nullopt;
  // Block (j, j') of U1 x U2 is U1(j, j') U2; the heaviest block fixes U2.
  std::size_t bj = 0, bk = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t k = 0; k < d1; ++k) {
      const double w = x.block(j * d2, k * d2, d2, d2).frobenius_norm();
      if (w > best) {
        best = w;
        bj = j;
        bk = k;
      }
    }
  if (best <= 0.0) return std::nullopt;
  const Matrix u2 = x.block(bj * d2, bk * d2, d2, d2) * (std::sqrt(static_cast<double>(d2)) / best);
  Matrix u1(d1, d1);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t k = 0; k < d1; ++k)
      u1(j, k) = trace_inner(x.block(j * d2, k * d2, d2, d2), u2) / static_cast<double>(d2);
  if (frobenius_distance(kron(u1, u2), x) > tol.reconstruction * static_cast<double>(d1 * d2)) {
    return std::nullopt;
  }
  return std::make_pair(u1, u2);
}

FactorTree recursive_decompose(const Matrix& x, const BipartiteShape& shape,
                               const SplitStrategy& strategy, const Tolerance& tol) {
  tol.validate();
  shape.validate();
  const std::size_t n = shape.dimension();
  FactorTree tree;
  tree.input = x;
  tree.shape = shape;
  tree.strategy = strategy.name();

  const auto product = shape.d1 > 1 && shape.d2 > 1 && x.rows() == n ? split_product(x, shape, tol)
                                                                     : std::nullopt;
  if (product) {
    if (!x.is_unitary(unitarity_threshold(n, tol))) throw Error(ErrorCode::NotUnitary, "input matrix is not unitary");
    const BipartiteShape s1{shape.d1, 1}, s2{1, shape.d2};
    const AITriple ai1 = ai_decompose(product->first, s1, tol);
    const AITriple ai2 = ai_decompose(product->second, s2, tol);
    const Matrix i1 = Matrix::identity(shape.d1), i2 = Matrix::identity(shape.d2);
    auto k_node = [&](const Matrix& k1, const Matrix& k2) {
      Factor f = leaf(FactorKind::ai_k, kron(k1, k2),
                      kron(orthogonal_log(k1, tol), i2) + kron(i1, orthogonal_log(k2, tol)), 0, shape);
      for (const auto& c : decompose_orthogonal(k1, s1, 1, strategy, tol)) f.parts.push_back(lift_subsystem(c, 1, shape));
      for (const auto& c : decompose_orthogonal(k2, s2, 1, strategy, tol)) f.parts.push_back(lift_subsystem(c, 2, shape));
      return f;
    };
    Factor a = leaf(FactorKind::ai_a, kron(ai1.A, ai2.A),
                    kron(ai_torus_generator(ai1.A, tol), i2) + kron(i1, ai_torus_generator(ai2.A, tol)), 0, shape);
    a.cartan_role = BasisRole::a;
    for (std::size_t k = 0; k < n; ++k) a.coefficients.push_back(a.generator(k, k).imag());
    tree.factors.push_back(k_node(ai1.K1, ai2.K1));
    tree.factors.push_back(std::move(a));
    tree.factors.push_back(k_node(ai1.K2, ai2.K2));
  } else {
    const AITriple ai = ai_decompose(x, shape, tol);
    auto k_node = [&](const Matrix& k) {
      Factor f = leaf(FactorKind::ai_k, k, orthogonal_log(k, tol), 0, shape);
      f.parts = decompose_orthogonal(k, shape, 1, strategy, tol);
      return f;
    };
    Factor a = leaf(FactorKind::ai_a, ai.A, ai_torus_generator(ai.A, tol), 0, shape);
    a.cartan_role = BasisRole::a;
    for (std::size_t k = 0; k < n; ++k) a.coefficients.push_back(a.generator(k, k).imag());
    tree.factors.push_back(k_node(ai.K1));
    tree.factors.push_back(std::move(a));
    tree.factors.push_back(k_node(ai.K2));
  }

  const double residual = tree.residual();
  const double limit = tol.reconstruction * static_cast<double>(std::max<std::size_t>(tree.leaves().size(), 1));
  if (residual > limit) {
    throw Error(ErrorCode::ReconstructionFailure, "factor product misses the input by " +
                                                      format_residual(residual));
  }
  return tree;
}

}  // namespace bicartan
