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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "bicartan/classify.hpp"
#include "bicartan/lie_bases.hpp"
#include "bicartan/linalg.hpp"
#include "bicartan/matrix.hpp"
#include "bicartan/recursion.hpp"

namespace bicartan {

inline constexpr std::string_view kMatrixHeader = "BICARTAN-MATRIX v1";
inline constexpr std::string_view kReportFormat = "bicartan-report v1";

/// Text format: the header line, then "d1 d2", then (d1 d2)^2 lines of
/// "re im" in row-major order. Blank lines and lines starting with '#' are
/// ignored.
struct MatrixFile {
  BipartiteShape shape;
  Matrix matrix;
};

/// Throws ParseError.
MatrixFile read_matrix_file(std::istream& in);
/// Throws IoError or ParseError.
MatrixFile load_matrix_file(const std::filesystem::path& path);
void write_matrix_file(std::ostream& out, const MatrixFile& file);
void save_matrix_file(const std::filesystem::path& path, const MatrixFile& file);

/// |i j k> -> |k i j> on three qubits, as an 8x8 permutation matrix.
Matrix gen_swap();
/// Seeded Haar-like unitary.
Matrix gen_random_unitary(std::size_t n, std::uint64_t seed);

struct ReportOptions {
  bool deterministic = false;
  double seconds = 0.0;
  Tolerance tol;
};

/// JSON report: input, leaf factors in multiplication order, residual,
/// inventory and (unless deterministic) timing.
std::string make_report(const FactorTree& tree, const HamiltonianInventory& inventory,
                        const ReportOptions& options);

struct VerifyResult {
  double stored = 0.0;
  double recomputed = 0.0;
  std::size_t factors = 0;
  bool ok = false;
  std::string message;
};

/// Re-multiplies the factors of a report and compares with its input and
/// stored residual. Throws ParseError on malformed reports.
VerifyResult verify_report(std::string_view report_text);

}  // namespace bicartan
