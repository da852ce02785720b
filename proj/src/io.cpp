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

#include "bicartan/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bicartan/error.hpp"
#include "json.hpp"

namespace bicartan {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Next line that carries data.
bool next_line(std::istream& in, std::string& line, std::size_t& number) {
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (!line.empty() && line[0] != '#') return true;
  }
  return false;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Exact integers are written without a decimal point.
json number(double x) {
  if (std::isfinite(x) && std::nearbyint(x) == x && std::abs(x) < 9.0e15) {
    return static_cast<std::int64_t>(x);
  }
  return x;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({number(m(i, j).real()), number(m(i, j).imag())});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, "matrix must be a non-empty array");
  const std::size_t n = j.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != n) throw Error(ErrorCode::ParseError, "matrix rows must be square");
    for (std::size_t k = 0; k < n; ++k) {
      const json& z = row[k];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw Error(ErrorCode::ParseError, "matrix entries must be [re, im] pairs");
      }
      m(i, k) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

json factor_json(const Factor& f, const BipartiteShape& shape, const Tolerance& tol) {
  json j;
  j["kind"] = std::string(to_string(f.kind));
  j["level"] = f.level;
  j["locality"] = std::string(to_string(f.locality));
  j["support"] = f.support;
  if (f.split) j["split"] = to_string(*f.split);
  if (f.cartan_role) {
    j["cartan_role"] = std::string(to_string(*f.cartan_role));
    json c = json::array();
    for (double x : f.coefficients) c.push_back(number(x));
    j["cartan_coefficients"] = c;
  }
  const auto b1 = local_basis(shape.d1);
  const auto b2 = local_basis(shape.d2);
  json terms = json::array();
  for (const auto& t : tensor_expand(f.generator, shape, tol).terms) {
    terms.push_back({b1[t.index1].label(), b2[t.index2].label(), number(t.coefficient.real()),
                     number(t.coefficient.imag())});
  }
  j["generator_terms"] = terms;
  j["matrix"] = matrix_json(f.matrix);
  return j;
}

}  // namespace

MatrixFile read_matrix_file(std::istream& in) {
  std::string line;
  std::size_t number_of_line = 0;
  if (!next_line(in, line, number_of_line) || line != kMatrixHeader) {
    parse_fail(number_of_line, "expected header '" + std::string(kMatrixHeader) + "'");
  }
  if (!next_line(in, line, number_of_line)) parse_fail(number_of_line, "missing shape line");
  MatrixFile file;
  {
    std::istringstream s(line);
    long long d1 = 0, d2 = 0;
    std::string extra;
    if (!(s >> d1 >> d2) || (s >> extra) || d1 < 1 || d2 < 1) parse_fail(number_of_line, "expected 'd1 d2' with positive integers");
    file.shape = {static_cast<std::size_t>(d1), static_cast<std::size_t>(d2)};
  }
  const std::size_t n = file.shape.dimension();
  file.matrix = Matrix(n, n);
  for (std::size_t k = 0; k < n * n; ++k) {
    if (!next_line(in, line, number_of_line)) {
      parse_fail(number_of_line, "expected " + std::to_string(n * n) + " entries, found " + std::to_string(k));
    }
    std::istringstream s(line);
    double re = 0.0, im = 0.0;
    std::string extra;
    if (!(s >> re >> im) || (s >> extra)) parse_fail(number_of_line, "expected 're im'");
    file.matrix(k / n, k % n) = Complex(re, im);
  }
  if (next_line(in, line, number_of_line)) parse_fail(number_of_line, "unexpected trailing data");
  return file;
}

MatrixFile load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_matrix_file(in);
}

void write_matrix_file(std::ostream& out, const MatrixFile& file) {
  out << kMatrixHeader << "\n" << file.shape.d1 << " " << file.shape.d2 << "\n";
  out.precision(17);
  for (const auto& z : file.matrix.entries()) out << z.real() << " " << z.imag() << "\n";
}

void save_matrix_file(const std::filesystem::path& path, const MatrixFile& file) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_matrix_file(out, file);
}

Matrix gen_swap() {
  Matrix x(8, 8);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) x(4 * k + 2 * i + j, 4 * i + 2 * j + k) = 1.0;
  return x;
}

Matrix gen_random_unitary(std::size_t n, std::uint64_t seed) { return random_unitary(n, seed); }

std::string make_report(const FactorTree& tree, const HamiltonianInventory& inventory,
                        const ReportOptions& options) {
  json j;
  j["format"] = std::string(kReportFormat);
  j["shape"] = {tree.shape.d1, tree.shape.d2};
  j["strategy"] = tree.strategy;
  j["tolerance"] = {{"reconstruction", options.tol.reconstruction},
                    {"orthogonality", options.tol.orthogonality},
                    {"cluster", options.tol.cluster},
                    {"zero", options.tol.zero}};
  j["input"] = matrix_json(tree.input);
  const auto leaves = tree.leaves();
  json factors = json::array();
  for (const Factor* f : leaves) factors.push_back(factor_json(*f, tree.shape, options.tol));
  j["factors"] = factors;
  if (tree.factors.size() == 3) j["first_level_factors"] = tree.factors[0].parts.size();
  j["residual"] = number(tree.residual());
  json inv = json::array();
  for (const auto& e : inventory.entries) {
    inv.push_back({{"family", std::string(to_string(e.family))}, {"representative", e.label}, {"count", e.count}});
  }
  j["inventory"] = inv;
  if (!options.deterministic) j["timing"] = {{"seconds", options.seconds}};
  return j.dump(2) + "\n";
}

VerifyResult verify_report(std::string_view report_text) {
  json j;
  try {
    j = json::parse(report_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kReportFormat) throw Error(ErrorCode::ParseError, "unknown report format");
    const Matrix input = matrix_from_json(j.at("input"));
    Matrix product = Matrix::identity(input.rows());
    VerifyResult out;
    for (const auto& f : j.at("factors")) {
      const Matrix m = matrix_from_json(f.at("matrix"));
      if (m.rows() != input.rows()) throw Error(ErrorCode::ParseError, "factor size differs from the input");
      product = product * m;
      ++out.factors;
    }
    out.stored = j.at("residual").get<double>();
    out.recomputed = frobenius_distance(product, input);
    const double limit = j.at("tolerance").at("reconstruction").get<double>() *
                         static_cast<double>(std::max<std::size_t>(out.factors, 1));
    const double mismatch = std::abs(out.recomputed - out.stored);
    const bool consistent = mismatch <= 1e-14 * std::max(out.stored, out.recomputed) + 1e-300;
    out.ok = consistent && out.recomputed <= limit;
    if (!consistent) {
      out.message = "stored residual " + format_residual(out.stored) + " differs from recomputed " +
                    format_residual(out.recomputed);
    } else if (out.recomputed > limit) {
      out.message = "residual " + format_residual(out.recomputed) + " exceeds " + format_residual(limit);
    } else {
      out.message = "ok";
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace bicartan
