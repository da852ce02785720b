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

#include "doctest.h"

#include <sstream>

#include "bicartan/classify.hpp"
#include "bicartan/error.hpp"
#include "bicartan/io.hpp"
#include "bicartan/recursion.hpp"
#include "json.hpp"
#include "swap_fixtures.hpp"

using namespace bicartan;

namespace {

std::string swap_report(bool deterministic) {
  FactorTree tree = recursive_decompose(gen_swap(), {2, 4}, SplitStrategy{{SplitPlan{1, 1, 2, 2}}});
  classify_tree(tree);
  return make_report(tree, inventory(tree), {deterministic, 0.5, {}});
}

}  // namespace

TEST_CASE("gen_swap is the reference permutation") {
  CHECK(gen_swap() == fixture::x_sw().to_matrix());
}

TEST_CASE("matrix file round trip") {
  const MatrixFile f{{2, 3}, gen_random_unitary(6, 9)};
  std::stringstream s;
  write_matrix_file(s, f);
  const MatrixFile g = read_matrix_file(s);
  CHECK(g.shape == f.shape);
  CHECK(g.matrix == f.matrix);
}

TEST_CASE("matrix file comments and blank lines") {
  std::stringstream s;
  s << "# leading comment\n" << kMatrixHeader << "\n\n1 2\n# entries\n1 0\n0 0\n0 0\n1 0\n";
  const MatrixFile f = read_matrix_file(s);
  CHECK(f.matrix == Matrix::identity(2));
}

TEST_CASE("matrix file errors carry line numbers") {
  auto parse = [](const std::string& text) {
    std::stringstream s(text);
    return read_matrix_file(s);
  };
  try {
    parse(std::string(kMatrixHeader) + "\n1 2\n1 0\n0 x\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("WRONG\n1 1\n1 0\n"), Error);
  CHECK_THROWS_AS(parse(std::string(kMatrixHeader) + "\n1 1\n1 0\n2 0\n"), Error);
  CHECK_THROWS_AS(parse(std::string(kMatrixHeader) + "\n0 2\n"), Error);
}

TEST_CASE("report structure") {
  const auto j = nlohmann::json::parse(swap_report(true));
  CHECK(j.at("format") == std::string(kReportFormat));
  CHECK(j.at("first_level_factors") == 7);
  CHECK(j.at("residual") == 0);
  CHECK_FALSE(j.contains("timing"));
  CHECK(j.at("inventory").size() == 3);
  CHECK(nlohmann::json::parse(swap_report(false)).contains("timing"));
}

TEST_CASE("deterministic reports are byte identical") {
  CHECK(swap_report(true) == swap_report(true));
}

TEST_CASE("verify accepts a fresh report and rejects tampering") {
  const std::string text = swap_report(true);
  const VerifyResult ok = verify_report(text);
  CHECK(ok.ok);
  CHECK(ok.recomputed == ok.stored);

  auto j = nlohmann::json::parse(text);
  j["factors"][0]["matrix"][0][0][0] = 0.5;
  const VerifyResult bad = verify_report(j.dump());
  CHECK_FALSE(bad.ok);

  auto k = nlohmann::json::parse(text);
  k["residual"] = 1e-3;
  CHECK_FALSE(verify_report(k.dump()).ok);

  CHECK_THROWS_AS(verify_report("{not json"), Error);
  CHECK_THROWS_AS(verify_report("{\"format\": \"other\"}"), Error);
}
