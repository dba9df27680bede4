// Copyright 2026 The harmdist Authors.
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

// End-to-end runs of the installed command-line tool.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#ifndef HARMDIST_CLI_PATH
#error "HARMDIST_CLI_PATH must name the harmdist binary"
#endif

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (const char c : s) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

Result run(const std::vector<std::string>& args, bool keep_stderr = false) {
  std::string cmd = quote(HARMDIST_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += keep_stderr ? " 2>&1" : " 2>/dev/null";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("harmdist_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  fs::path dir_;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string seeded_corpus(std::size_t lines) {
  std::mt19937_64 rng(2024);
  const std::string stems[] = {"harmonic", "distance", "sequence", "subsequence", "metric"};
  std::string out;
  for (std::size_t i = 0; i < lines; ++i) {
    std::string s = stems[rng() % 5];
    const std::size_t edits = rng() % 4;
    for (std::size_t e = 0; e < edits && !s.empty(); ++e) {
      const std::size_t pos = rng() % s.size();
      switch (rng() % 3) {
        case 0: s.erase(pos, 1); break;
        case 1: s.insert(pos, 1, static_cast<char>('a' + rng() % 26)); break;
        default: s[pos] = static_cast<char>('a' + rng() % 26);
      }
    }
    out += s + "\n";
  }
  return out;
}

TEST_F(Cli, DistExamples) {
  EXPECT_EQ(run({"dist", "abc", "abc"}).out, "0.000000000000\n");
  EXPECT_EQ(run({"dist", "abc", "abd"}).out, "0.500000000000\n");
  EXPECT_EQ(run({"dist", "", "ab"}).out, "1.500000000000\n");
  EXPECT_EQ(run({"--precision", "3", "dist", "a", "b"}).out, "1.000\n");
  EXPECT_EQ(run({"--mode", "words", "dist", "to be", "to see"}).out, "0.666666666667\n");
  EXPECT_EQ(run({"--mode", "bytes", "dist", "\xC3\xA9", "e"}).out, "1.166666666667\n");
  EXPECT_EQ(run({"--engine", "bitparallel", "dist", "kitten", "sitting"}).out,
            "0.615079365079\n");
}

TEST_F(Cli, EncodingErrorsExitTwo) {
  const auto r = run({"dist", "\xFF", "a"}, true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("UTF-8"), std::string::npos);
  EXPECT_EQ(run({"--mode", "bytes", "dist", "\xFF", "a"}).code, 0);
}

TEST_F(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"dist", "a"}).code, 1);
  EXPECT_EQ(run({"--mode", "glyphs", "dist", "a", "b"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, Matrix) {
  const auto one = run({"matrix", write("one.txt", "solo\n")});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, "0\n0.000000000000\n");

  const auto ab = run({"matrix", write("ab.txt", "a\nb")});
  EXPECT_EQ(ab.out, "0\t1\n0.000000000000\t1.000000000000\n1.000000000000\t0.000000000000\n");

  const auto dup = run({"matrix", write("dup.txt", "abc\nabd\nabc\n")});
  const auto rows = split(dup.out, '\n');
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1], rows[3]);

  EXPECT_EQ(run({"matrix", (dir_ / "missing.txt").string()}).code, 2);
}

TEST_F(Cli, MatrixEntriesEqualDist) {
  const std::vector<std::string> lines{"", "kitten", "sitting", "h\xC3\xA9llo", "hello world"};
  std::string content;
  for (const auto& l : lines) content += l + "\n";
  const std::string path = write("lines.txt", content);
  const auto one = run({"matrix", "--workers", "1", path});
  const auto many = run({"matrix", "--workers", "4", path});
  EXPECT_EQ(one.out, many.out);
  const auto rows = split(one.out, '\n');
  ASSERT_EQ(rows.size(), lines.size() + 1);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto cells = split(rows[i + 1], '\t');
    ASSERT_EQ(cells.size(), lines.size());
    for (std::size_t j = 0; j < lines.size(); ++j) {
      EXPECT_EQ(cells[j] + "\n", run({"dist", lines[i], lines[j]}).out) << i << "," << j;
    }
  }
}

TEST_F(Cli, KnnBasics) {
  const std::string path = write("c.txt", "apple\nmaple\napply\n\nbanana\n");
  const auto exact = run({"knn", path, "apply", "-k", "1"});
  EXPECT_EQ(exact.code, 0);
  EXPECT_EQ(exact.out, "1\t2\t0.000000000000\tapply\n");

  const auto all = run({"knn", path, "apple", "-k", "99"});
  const auto rows = split(all.out, '\n');
  ASSERT_EQ(rows.size(), 5u);
  double previous = -1.0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto cells = split(rows[r], '\t');
    ASSERT_GE(cells.size(), 3u);
    EXPECT_EQ(cells[0], std::to_string(r + 1));
    const double d = std::stod(cells[2]);
    EXPECT_GE(d, previous);
    previous = d;
  }
  EXPECT_EQ(run({"knn", write("empty.txt", ""), "x"}).code, 1);
  EXPECT_EQ(run({"knn", path, "x", "-k", "0"}).code, 1);
}

TEST_F(Cli, KnnIndexAgreesWithScan) {
  const std::string path = write("corpus.txt", seeded_corpus(2000));
  const std::string index = (dir_ / "corpus.hvpt").string();
  ASSERT_EQ(run({"--seed", "5", "index", path, "-o", index}).code, 0);
  for (const std::string q : {"harmonic", "sequense", "metrics", "zzz"}) {
    const auto scan = run({"knn", path, q, "-k", "10", "--no-index"});
    const auto built = run({"knn", path, q, "-k", "10"});
    const auto loaded = run({"knn", path, q, "-k", "10", "--index", index});
    EXPECT_EQ(scan.code, 0);
    EXPECT_EQ(scan.out, built.out) << q;
    EXPECT_EQ(scan.out, loaded.out) << q;
    EXPECT_EQ(split(scan.out, '\n').size(), 10u);
  }
  const auto stats = run({"knn", path, "metric", "-k", "10", "--stats"}, true);
  EXPECT_NE(stats.out.find("corpus=2000"), std::string::npos);

  const std::string other = write("other.txt", "different\ncorpus\n");
  EXPECT_EQ(run({"knn", other, "x", "--index", index}).code, 2);
  EXPECT_EQ(run({"knn", path, "x", "--index", (dir_ / "nope.hvpt").string()}).code, 2);
}

TEST_F(Cli, CheckExhaustiveRational) {
  const auto r = run({"check", "--exhaustive", "alphabet=2", "maxlen=4", "--rational"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("property=triangle checked=29791 violations=0"), std::string::npos);
  EXPECT_NE(r.out.find("result=PASS"), std::string::npos);
}

TEST_F(Cli, CheckRandomAndVacuous) {
  EXPECT_EQ(run({"check", "--random", "samples=0"}).code, 0);
  const auto a = run({"--seed", "3", "check", "--random", "--float", "alphabet=4", "maxlen=30",
                      "samples=500", "--workers", "1"});
  const auto b = run({"--seed", "3", "check", "--random", "--float", "alphabet=4", "maxlen=30",
                      "samples=500", "--workers", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"check", "--json", "alphabet=2", "maxlen=2"}).out.front(), '[');
}

TEST_F(Cli, CheckUsageErrors) {
  EXPECT_EQ(run({"check", "--exhaustive", "alphabet=2", "maxlen=20"}).code, 1);
  EXPECT_EQ(run({"check", "colour=3"}).code, 1);
  EXPECT_EQ(run({"check", "alphabet=x"}).code, 1);
  EXPECT_EQ(run({"check", "--random", "--exhaustive"}).code, 1);
}

TEST_F(Cli, CheckFixtureExitsThree) {
  const auto r = run({"check", "--fixture", "broken-lcs", "--exhaustive", "alphabet=2", "maxlen=4"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("counterexample property="), std::string::npos);
  EXPECT_NE(r.out.find("result=FAIL"), std::string::npos);
}

}  // namespace
