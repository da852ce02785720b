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

#include "bicartan/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bicartan/classify.hpp"
#include "bicartan/error.hpp"
#include "bicartan/io.hpp"
#include "bicartan/recursion.hpp"

namespace bicartan::cli {

SplitPlan parse_split(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 0) {
      throw Error(ErrorCode::ParseError, "split '" + text + "' must be four non-negative integers r1,q1,r2,q2");
    }
    values.push_back(static_cast<std::size_t>(v));
  }
  if (values.size() != 4) {
    throw Error(ErrorCode::ParseError, "split '" + text + "' must be four non-negative integers r1,q1,r2,q2");
  }
  SplitPlan plan{values[0], values[1], values[2], values[3]};
  plan.validate();
  return plan;
}

namespace {

struct DecomposeArgs {
  std::string input;
  bool swap = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> d1, d2;
  std::vector<std::string> splits;
  std::optional<double> tol;
  std::string out;
  bool deterministic = false;
  bool json = false;
};

struct GenerateArgs {
  bool swap = false;
  bool identity = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> d1, d2;
  std::string out;
};

struct BasesArgs {
  std::size_t d1 = 2, d2 = 2;
  std::string split;
};

BipartiteShape require_shape(const std::optional<std::size_t>& d1, const std::optional<std::size_t>& d2,
                             const char* what) {
  if (!d1 || !d2) throw Error(ErrorCode::ParseError, std::string(what) + " needs --d1 and --d2");
  BipartiteShape s{*d1, *d2};
  s.validate();
  return s;
}

MatrixFile source_matrix(bool swap, bool identity, const std::optional<std::uint64_t>& seed,
                         const std::string& input, const std::optional<std::size_t>& d1,
                         const std::optional<std::size_t>& d2) {
  const int sources = int(swap) + int(identity) + int(seed.has_value()) + int(!input.empty());
  if (sources != 1) {
    throw Error(ErrorCode::ParseError, "give exactly one input: a matrix file, --swap, --identity or --random-seed");
  }
  if (swap) {
    const BipartiteShape s{d1.value_or(2), d2.value_or(4)};
    if (s.dimension() != 8) throw Error(ErrorCode::DimensionMismatch, "the SWAP example needs d1 * d2 = 8");
    return {s, gen_swap()};
  }
  if (identity) {
    const BipartiteShape s = require_shape(d1, d2, "--identity");
    return {s, Matrix::identity(s.dimension())};
  }
  if (seed) {
    const BipartiteShape s = require_shape(d1, d2, "--random-seed");
    return {s, gen_random_unitary(s.dimension(), *seed)};
  }
  MatrixFile f = load_matrix_file(input);
  if ((d1 && *d1 != f.shape.d1) || (d2 && *d2 != f.shape.d2)) {
    throw Error(ErrorCode::DimensionMismatch, "file shape " + std::to_string(f.shape.d1) + "x" +
                                                  std::to_string(f.shape.d2) + " differs from --d1/--d2");
  }
  return f;
}

int decompose(const DecomposeArgs& a, std::ostream& out) {
  const MatrixFile src = source_matrix(a.swap, false, a.seed, a.input, a.d1, a.d2);
  SplitStrategy strategy;
  for (const auto& s : a.splits) strategy.levels.push_back(parse_split(s));
  Tolerance tol;
  if (a.tol) tol.reconstruction = *a.tol;
  tol.validate();

  const auto start = std::chrono::steady_clock::now();
  FactorTree tree = recursive_decompose(src.matrix, src.shape, strategy, tol);
  classify_tree(tree, tol);
  const HamiltonianInventory inv = inventory(tree, tol);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string report = make_report(tree, inv, {a.deterministic, seconds, tol});
  if (a.json) {
    out << report;
  } else {
    out << "shape " << src.shape.d1 << "x" << src.shape.d2 << ", strategy " << tree.strategy << "\n";
    out << "leaf factors: " << tree.leaves().size();
    if (!tree.factors.empty()) out << ", first level: " << tree.factors.front().parts.size();
    out << "\n";
    out << "residual: " << format_residual(tree.residual()) << "\n";
    out << "entangling families: " << inv.entries.size() << "\n";
    for (const auto& e : inv.entries) {
      out << "  " << std::left << std::setw(6) << to_string(e.family) << e.label << "  (" << e.count
          << (e.count == 1 ? " factor)\n" : " factors)\n");
    }
  }
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw Error(ErrorCode::IoError, "cannot write " + a.out);
    f << report;
    if (!a.json) out << "report: " << a.out << "\n";
  }
  return kOk;
}

int verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream text;
  text << f.rdbuf();
  const VerifyResult r = verify_report(text.str());
  std::ostream& dest = r.ok ? out : err;
  dest << "factors: " << r.factors << ", stored residual " << format_residual(r.stored) << ", recomputed "
       << format_residual(r.recomputed) << ": " << r.message << "\n";
  return r.ok ? kOk : kFailure;
}

double max_commutator(const SubspaceBasis& b, std::size_t from, std::size_t to) {
  double worst = 0.0;
  for (std::size_t i = from; i < to; ++i)
    for (std::size_t j = i + 1; j < to; ++j)
      worst = std::max(worst, commutator(b.elements[i], b.elements[j]).max_abs());
  return worst;
}

int bases(const BasesArgs& a, std::ostream& out) {
  const BipartiteShape shape{a.d1, a.d2};
  shape.validate();
  const SplitPlan plan = a.split.empty() ? plan_for(shape, 1, {}) : parse_split(a.split);
  if (plan.shape() != shape) throw Error(ErrorCode::BadSplit, "split " + to_string(plan) + " does not match the shape");
  out << "split " << to_string(plan) << ": r = " << plan.r() << ", q = " << plan.q() << "\n";
  const SubspaceBasis a1 = cartan_a_prime(plan);
  const SubspaceBasis a2 = cartan_a_dprime(plan);
  out << "a' (" << a1.size() << " elements, max |[x, y]| = " << max_commutator(a1, 0, a1.size()) << ")\n";
  for (const auto& l : a1.labels) out << "  " << l << "\n";
  const std::size_t nn = plan.q1 * plan.q2;
  out << "a'' (" << a2.size() << " elements: " << nn << " symmetric, " << a2.size() - nn
      << " antisymmetric; max |[x, y]| = " << max_commutator(a2, 0, a2.size()) << ")\n";
  for (const auto& l : a2.labels) out << "  " << l << "\n";
  return kOk;
}

int generate(const GenerateArgs& a, std::ostream& out) {
  const MatrixFile src = source_matrix(a.swap, a.identity, a.seed, "", a.d1, a.d2);
  if (a.out.empty()) {
    write_matrix_file(out, src);
  } else {
    save_matrix_file(a.out, src);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite Cartan factorization of unitary matrices", "bicartan"};
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* d = app.add_subcommand("decompose", "Factor a unitary and report the factors");
  d->add_option("input", dec.input, "Matrix file");
  d->add_flag("--swap", dec.swap, "Use the three-qubit cyclic SWAP");
  d->add_option("--random-seed", dec.seed, "Use a seeded random unitary (needs --d1, --d2)");
  d->add_option("--d1", dec.d1, "Dimension of subsystem 1");
  d->add_option("--d2", dec.d2, "Dimension of subsystem 2");
  d->add_option("--split", dec.splits, "r1,q1,r2,q2 for the next recursion level (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  d->add_option("--tol", dec.tol, "Reconstruction tolerance");
  d->add_option("--out", dec.out, "Write the JSON report here");
  d->add_flag("--deterministic", dec.deterministic, "Omit timing from the report");
  d->add_flag("--json", dec.json, "Print the JSON report instead of the summary");

  std::string report_path;
  auto* v = app.add_subcommand("verify", "Re-multiply the factors of a report");
  v->add_option("report", report_path, "Report file")->required();

  BasesArgs bas;
  auto* b = app.add_subcommand("bases", "Print the commuting torus bases for a split");
  b->add_option("--d1", bas.d1, "Dimension of subsystem 1");
  b->add_option("--d2", bas.d2, "Dimension of subsystem 2");
  b->add_option("--split", bas.split, "r1,q1,r2,q2 (default balanced)");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a matrix file");
  g->add_flag("--swap", gen.swap, "Three-qubit cyclic SWAP");
  g->add_flag("--identity", gen.identity, "Identity (needs --d1, --d2)");
  g->add_option("--random-seed", gen.seed, "Seeded random unitary (needs --d1, --d2)");
  g->add_option("--d1", gen.d1, "Dimension of subsystem 1");
  g->add_option("--d2", gen.d2, "Dimension of subsystem 2");
  g->add_option("--out", gen.out, "Output file (default stdout)");

  std::vector<std::string> storage{"bicartan"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (d->parsed()) return decompose(dec, out);
    if (v->parsed()) return verify(report_path, out, err);
    if (b->parsed()) return bases(bas, out);
    if (g->parsed()) return generate(gen, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? kUsage : kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace bicartan::cli
