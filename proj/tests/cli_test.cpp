// Copyright 2026 The gpoly Authors
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

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace gpoly::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& contents)
      : path_(std::filesystem::temp_directory_path() /
              ("gpoly_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
               "_" + name)) {
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(Compute, Examples) {
  EXPECT_EQ(Invoke({"compute", "--poly", "eep", "--edges", "2 1;1 2"}).out, "x^2 + x*y + z\n");
  EXPECT_EQ(Invoke({"compute", "--poly", "scp", "--edges", "1 0"}).out, "v*x + 1\n");
  EXPECT_EQ(Invoke({"compute", "--poly", "eep", "--edges", "0 0"}).out, "1\n");
  EXPECT_EQ(Invoke({"compute", "--poly", "potts", "--edges", "0 0"}).out, "1\n");
  EXPECT_EQ(Invoke({"compute", "--poly", "scp", "--algo", "rec", "--g6", "A_"}).out,
            "v^2*x^2 + v^2*x*y + 2*v*x + 1\n");
  EXPECT_EQ(Invoke({"compute", "--poly", "tcp", "--g6", "A_"}).out, "x^2 + y*z - y\n");
  EXPECT_EQ(Invoke({"compute", "--poly", "scp", "--edges", "1 0", "--json"}).out,
            "[{\"c\":\"1\",\"e\":[1,1,0,0]},{\"c\":\"1\",\"e\":[0,0,0,0]}]\n");
}

TEST(Compute, AlgorithmsAgree) {
  const std::vector<std::vector<std::string>> combos{
      {"scp", "def"},   {"scp", "induced"},  {"scp", "rec"},     {"tcp", "expansion"},
      {"tcp", "rec"},   {"potts", "rec"},    {"badcol", "rec"},  {"bivchrom", "rec"}};
  for (const auto& c : combos) {
    const auto def = Invoke({"compute", "--poly", c[0], "--edges", "3 4;1 2;2 3;1 3;3 3"});
    const auto alt =
        Invoke({"compute", "--poly", c[0], "--algo", c[1], "--edges", "3 4;1 2;2 3;1 3;3 3"});
    EXPECT_EQ(def.code, kOk);
    EXPECT_EQ(def.out, alt.out) << c[0] << " " << c[1];
  }
}

TEST(Compute, ReadsGraphFiles) {
  TempFile edges("p3.txt", "3 2\n1 2\n2 3\n");
  TempFile g6("k3.g6", "Bw\n");
  EXPECT_EQ(Invoke({"compute", "--poly", "potts", "--graph", edges.path()}).out,
            Invoke({"compute", "--poly", "potts", "--edges", "3 2;1 2;2 3"}).out);
  EXPECT_EQ(Invoke({"compute", "--poly", "bivchrom", "--graph", g6.path()}).out,
            Invoke({"compute", "--poly", "bivchrom", "--edges", "3 3;1 2;2 3;1 3"}).out);
}

TEST(Compute, IsDeterministic) {
  const std::vector<std::string> args{"compute", "--poly", "eep", "--edges",
                                      "4 6;1 2;2 3;3 4;4 1;1 3;2 2"};
  const auto first = Invoke(args);
  EXPECT_EQ(first.code, kOk);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(Invoke(args).out, first.out);
}

TEST(Transform, Examples) {
  TempFile xi("xi.txt", "x^2 + x*y + z\n");
  EXPECT_EQ(Invoke({"transform", "--from", "eep", "--to", "scp", "--n", "2", "--input", xi.path()})
                .out,
            "v^2*x^2 + v^2*x*y + 2*v*x + 1\n");
  EXPECT_EQ(Invoke({"transform", "--from", "eep", "--to", "tcp", "--input", xi.path()}).out,
            "x^2 + y*z - y\n");
  TempFile h("h.txt", "v^2*x^2 + v^2*x*y + 2*v*x + 1");
  EXPECT_EQ(Invoke({"transform", "--from", "scp", "--to", "eep", "--n", "2", "--input", h.path()})
                .out,
            "x^2 + x*y + z\n");
  EXPECT_EQ(Invoke({"transform", "--from", "scp", "--to", "tcp", "--n", "2", "--input", h.path()})
                .out,
            "x^2 + y*z - y\n");
}

TEST(Transform, Errors) {
  TempFile h("h.txt", "v^2*x^2 + v^2*x*y + 2*v*x + 1");
  EXPECT_EQ(Invoke({"transform", "--from", "scp", "--to", "eep", "--input", h.path()}).code,
            kBadFlags);
  EXPECT_EQ(Invoke({"transform", "--from", "scp", "--to", "eep", "--n", "1", "--input", h.path()})
                .code,
            kNonPolynomial);
  TempFile bad("bad.txt", "x + + y");
  EXPECT_EQ(Invoke({"transform", "--from", "eep", "--to", "tcp", "--input", bad.path()}).code,
            kParseFailure);
  EXPECT_EQ(Invoke({"transform", "--from", "eep", "--to", "potts", "--input", h.path()}).code,
            kBadFlags);
}

TEST(Deck, Examples) {
  const auto r = Invoke({"deck", "--edges", "2 1;1 2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "2\nv*x + 1\nv*x + 1\n");
}

TEST(Reconstruct, LowerStrataAndBruteForce) {
  TempFile p3(
      "p3.deck",
      Invoke({"deck", "--edges", "3 2;1 2;2 3"}).out);
  EXPECT_EQ(Invoke({"reconstruct", "--deck", p3.path()}).out,
            "3*v^2*x^2 + 2*v^2*x*y + 3*v*x + 1\n");
  const auto full = Invoke({"reconstruct", "--deck", p3.path(), "--brute-force"});
  EXPECT_EQ(full.code, kOk);
  EXPECT_EQ(full.out, "3*v^2*x^2 + 2*v^2*x*y + 3*v*x + 1\n" +
                          Invoke({"compute", "--poly", "scp", "--edges", "3 2;1 2;2 3"}).out);

  TempFile k2("k2.deck", "2\nv*x + 1\nv*x + 1\n");
  EXPECT_EQ(Invoke({"reconstruct", "--deck", k2.path(), "--brute-force"}).code,
            kReconstructionAmbiguous);
  TempFile fake("fake.deck", "3\n0\n0\n0\n");
  EXPECT_EQ(Invoke({"reconstruct", "--deck", fake.path(), "--brute-force"}).code,
            kReconstructionAmbiguous);
  TempFile odd("odd.deck", "2\nv*x + 1\nv*x\n");
  EXPECT_EQ(Invoke({"reconstruct", "--deck", odd.path()}).code, kParseFailure);
}

TEST(Degseq, Examples) {
  EXPECT_EQ(Invoke({"degseq", "--edges", "3 2;1 2;2 3"}).out, "1:2\n2:1\n");
  EXPECT_EQ(Invoke({"degseq", "--edges", "1 1;1 1"}).out, "1:1\n");
  EXPECT_EQ(Invoke({"degseq", "--edges", "2 2;1 2;1 2"}).out, "2:2\n");
}

TEST(Check, SingleGraphs) {
  EXPECT_EQ(Invoke({"check", "--edges", "3 3;1 2;2 3;1 3"}).code, kOk);
  const auto k3 = Invoke({"check", "--g6", "Bw"});
  EXPECT_EQ(k3.code, kOk);
  EXPECT_NE(k3.out.find("summary: 1 graphs"), std::string::npos);
  EXPECT_NE(k3.out.find("0 failed"), std::string::npos);
  EXPECT_EQ(k3.out.find("FAIL"), std::string::npos);

  const auto loop = Invoke({"check", "--edges", "1 1;1 1"});
  EXPECT_EQ(loop.code, kOk) << loop.out;
}

TEST(Check, Corpus) {
  const auto r = Invoke({"check", "--corpus", "all-n4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("summary: 64 graphs"), std::string::npos);
  EXPECT_NE(r.out.find("graph 63 (n=4, m=6)"), std::string::npos);
  EXPECT_EQ(Invoke({"check", "--corpus", "all-n9"}).code, kBadFlags);
  EXPECT_EQ(Invoke({"check", "--corpus", "all-n3", "--g6", "A_"}).code, kBadFlags);
}

TEST(ExitCodes, Errors) {
  EXPECT_EQ(Invoke({}).code, kBadFlags);
  EXPECT_EQ(Invoke({"compute", "--poly", "nope", "--g6", "A_"}).code, kBadFlags);
  EXPECT_EQ(Invoke({"compute", "--poly", "eep"}).code, kBadFlags);
  EXPECT_EQ(Invoke({"compute", "--poly", "eep", "--g6", "A_", "--edges", "1 0"}).code, kBadFlags);
  EXPECT_EQ(Invoke({"compute", "--poly", "scomp", "--algo", "rec", "--g6", "A_"}).code, kBadFlags);
  EXPECT_EQ(Invoke({"compute", "--poly", "eep", "--edges", "2 1;1 3"}).code, kParseFailure);
  EXPECT_EQ(Invoke({"compute", "--poly", "eep", "--g6", "A`"}).code, kParseFailure);
  EXPECT_EQ(Invoke({"compute", "--poly", "eep", "--graph", "/nonexistent/file"}).code,
            kParseFailure);
  EXPECT_EQ(Invoke({"--help"}).code, kOk);
}

TEST(ExitCodes, SizeGuard) {
  // 13 vertices exceeds the default vertex cap.
  EXPECT_EQ(Invoke({"compute", "--poly", "scp", "--edges", "13 0"}).code, kGuard);
  ::setenv("GP_SIZE_GUARD", "2", 1);
  EXPECT_EQ(Invoke({"compute", "--poly", "eep", "--g6", "Bw"}).code, kGuard);
  EXPECT_EQ(Invoke({"compute", "--poly", "eep", "--g6", "A_"}).code, kOk);
  ::unsetenv("GP_SIZE_GUARD");
  EXPECT_EQ(Invoke({"compute", "--poly", "eep", "--g6", "Bw"}).code, kOk);
}

}  // namespace
}  // namespace gpoly::cli
