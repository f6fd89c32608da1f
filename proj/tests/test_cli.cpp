// Copyright 2026 The gcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gcf/cli.hpp"
#include "gcf/divisors.hpp"
#include "gcf/factor.hpp"
#include "gcf/polytype.hpp"
#include "gcf/text.hpp"
#include "gcf/witness.hpp"

using namespace gcf;
namespace fs = std::filesystem;

namespace {

const fs::path kGolden = GCF_GOLDEN_DIR;

struct Run {
  int rc;
  std::string out, err;
};

Run gcf_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> golden_args(const fs::path& p) {
  std::vector<std::string> args;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    if (const auto at = line.find("@GOLDEN@"); at != std::string::npos) line.replace(at, 8, kGolden.string());
    args.push_back(line);
  }
  return args;
}

std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  return {};
}

}  // namespace

TEST_CASE("golden files") {
  std::vector<fs::path> cases;
  for (const auto& e : fs::directory_iterator(kGolden))
    if (e.path().extension() == ".args") cases.push_back(e.path());
  std::sort(cases.begin(), cases.end());
  REQUIRE(cases.size() >= 15);
  for (const fs::path& c : cases) {
    CAPTURE(c.filename().string());
    const std::vector<std::string> args = golden_args(c);
    const Run r = gcf_run(args);
    CHECK(r.rc == 0);
    CHECK(r.err.empty());
    CHECK(r.out == slurp(fs::path(c).replace_extension(".out")));
    // byte-identical on a second run
    CHECK(gcf_run(args).out == r.out);
  }
}

TEST_CASE("worked examples from the command line") {
  CHECK(gcf_run({"simtype", "--field", "GF(2)", "--f", "X^4", "--g", "X^3+1"}).out == "(X+1)^2, (X+1), (X+1)\n");
  CHECK(gcf_run({"span", "--field", "GF(2)", "--f", "X^2+X+1", "--g", "X^2+1"}).out == "dim=4 predicted=4\n");
  const Run r = gcf_run({"polytype", "--matrix", (kGolden / "cex_gf2.mat").string()});
  CHECK(r.out.rfind("No (exhausted 1024 pairs)\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(gcf_run({}).rc == cli::kExitParse);
  CHECK(gcf_run({"frobnicate"}).rc == cli::kExitParse);
  CHECK(gcf_run({"simtype", "--field", "GF(2)", "--f", "X^4"}).rc == cli::kExitParse);
  CHECK(gcf_run({"simtype", "--field", "GF(6)", "--f", "X", "--g", "X"}).rc == cli::kExitParse);
  CHECK(gcf_run({"simtype", "--field", "GF(2)", "--f", "X^^2", "--g", "X"}).rc == cli::kExitParse);
  CHECK(gcf_run({"polytype", "--matrix", (kGolden / "missing.mat").string()}).rc == cli::kExitParse);
  CHECK(gcf_run({"nilpotent", "--field", "GF(2)", "--profile", "1,,3"}).rc == cli::kExitParse);

  // parse fine, rejected by the engine; no partial report on stdout
  const Run span = gcf_run({"span", "--field", "GF(2)", "--f", "X^2", "--g", "X"});
  CHECK(span.rc == cli::kExitEngine);
  CHECK(span.out.empty());
  CHECK_FALSE(span.err.empty());
  CHECK(gcf_run({"eldiv", "--field", "GF(2)", "--invariants", "X^2,X", "--g", "X"}).rc == cli::kExitEngine);
  CHECK(gcf_run({"element", "--field", "GF(2)", "--f", "X^2+1", "--g", "X"}).rc == cli::kExitEngine);

  // No and Unknown are answers
  CHECK(gcf_run({"nilpotent", "--field", "GF(2)", "--profile", "1,3,5"}).rc == cli::kExitOk);
  CHECK(gcf_run({"polytype", "--matrix", (kGolden / "cex_gf2.mat").string(), "--budget", "5"}).rc == cli::kExitOk);
  CHECK(gcf_run({"--help"}).rc == cli::kExitOk);
}

TEST_CASE("printed values parse back") {
  for (const char* name : {"GF(2)", "GF(3)", "GF(2^2)", "GF(5)"}) {
    const Run r = gcf_run({"counterexample", "--field", name});
    REQUIRE(r.rc == 0);
    const Matrix a = parse_matrix(r.out);
    CHECK(a == counterexample_matrix(parse_field(name)));
    CHECK(format_matrix(a) == r.out);
  }

  const Run fac = gcf_run({"factor", "--field", "GF(2^2)", "--poly", "X^6+t*X+1"});
  REQUIRE(fac.rc == 0);
  const Field F4 = parse_field("GF(2^2)");
  const Factorization got = factor(parse_poly(F4, "X^6+t*X+1"));
  CHECK(fac.out == format_factorization(F4, got) + "\n");
  Poly prod = Poly::constant(F4, F4.one());
  for (const auto& [p, e] : got.factors) {
    CHECK(parse_poly(F4, format_poly(p)) == p);
    prod *= pow(p, e);
  }
  CHECK(prod == parse_poly(F4, "X^6+t*X+1"));

  // a witness printed by polytype re-parses and still verifies
  const Run yes = gcf_run({"polytype", "--matrix", (kGolden / "jordan_gf4.mat").string()});
  REQUIRE(yes.rc == 0);
  const Matrix a = parse_matrix(slurp(kGolden / "jordan_gf4.mat"));
  const Witness w{parse_poly(a.field(), value_of(yes.out, "f")), parse_poly(a.field(), value_of(yes.out, "g")), ""};
  CHECK(verify_witness(a, w));
}

TEST_CASE("search flags") {
  const std::string cex = (kGolden / "cex_gf2.mat").string();
  const Run serial = gcf_run({"polytype", "--matrix", cex});
  CHECK(gcf_run({"polytype", "--matrix", cex, "--threads", "4"}).out == serial.out);
  const Run timed = gcf_run({"polytype", "--matrix", cex, "--timing"});
  CHECK_FALSE(value_of(timed.out, "elapsed_ms").empty());
  CHECK(value_of(serial.out, "elapsed_ms").empty());
  const Run capped = gcf_run({"polytype", "--matrix", cex, "--budget", "100"});
  CHECK(capped.out.rfind("Unknown", 0) == 0);
  CHECK(value_of(capped.out, "examined_pairs") == "100");
}

TEST_CASE("the seed does not change answers") {
  for (const char* seed : {"1", "2", "12345"}) {
    CHECK(gcf_run({"--seed", seed, "factor", "--field", "GF(5)", "--poly", "X^8+3*X^2+1"}).out ==
          slurp(kGolden / "factor_seed.out"));
    CHECK(gcf_run({"--seed", seed, "simtype", "--field", "GF(2)", "--f", "X^4", "--g", "X^3+1"}).out ==
          slurp(kGolden / "simtype_gf2.out"));
  }
}
