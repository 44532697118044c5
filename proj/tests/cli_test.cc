// Copyright 2026 The segdisc Authors.
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Outcome {
  int status = -1;
  std::string output;
};

Outcome Invoke(const std::string& args, const std::string& env = "") {
  std::string command = env + std::string(SEGDISC_BINARY) + " " + args + " 2>&1";
  Outcome out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return out;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) out.output.append(buffer, n);
  int raw = pclose(pipe);
  out.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

const std::string kFixture = SEGDISC_TEST_DATA "/table1.txt";

std::filesystem::path TempFile(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

TEST(CliTest, SegmentPrintsOneLinePerUtterance) {
  Outcome o = Invoke("segment --corpus " + kFixture + " --order 1");
  ASSERT_EQ(o.status, 0) << o.output;
  EXPECT_EQ(std::count(o.output.begin(), o.output.end(), '\n'), 20);
  EXPECT_EQ(o.output.substr(0, o.output.find('\n')), "hQsIli6vmi");
}

TEST(CliTest, EvalWritesCsv) {
  auto out = std::filesystem::temp_directory_path() / "segdisc_cli_eval.csv";
  Outcome o = Invoke("eval --corpus " + kFixture + " --order 2 --block-size 10 --out " +
                  out.string());
  ASSERT_EQ(o.status, 0) << o.output;
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header,
            "run_id,block_index,utterances,precision,recall,lexicon_precision,model,"
            "phoneme_mode,train_fraction");
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.rfind("0,", 0) == 0) ++rows;
  }
  EXPECT_EQ(rows, 2);
}

TEST(CliTest, Scenario) {
  Outcome o = Invoke("scenario-damn-british --order 1");
  ASSERT_EQ(o.status, 0) << o.output;
  EXPECT_NE(o.output.find("first split at x = 7"), std::string::npos) << o.output;
  EXPECT_NE(o.output.find("7\tD&m brItIS"), std::string::npos);
}

TEST(CliTest, OtherCommandsSucceed) {
  for (std::string cmd : {"permute-average --runs 3 --block-size 5",
                          "train-sweep --runs 2 --sweep-step 5 --sweep-cap 0.5",
                          "fully-trained", "lexicon-growth", "phoneme-modes",
                          "eval --baseline-random --seed 3",
                          "eval --train-frac 0.5 --phoneme-mode speech --require-vowel"}) {
    Outcome o = Invoke(cmd + " --corpus " + kFixture + " --order 3");
    EXPECT_EQ(o.status, 0) << cmd << "\n" << o.output;
  }
}

TEST(CliTest, Reproducible) {
  std::string args = "eval --corpus " + kFixture + " --order 1 --seed 9 --block-size 4";
  EXPECT_EQ(Invoke(args).output, Invoke(args).output);
}

TEST(CliTest, CorpusAndConfigErrorsExitOne) {
  auto bad = TempFile("segdisc_cli_bad.txt", "hQ sIli\nab $x\n");
  Outcome o = Invoke("segment --corpus " + bad.string() + " --order 1");
  EXPECT_EQ(o.status, 1);
  EXPECT_NE(o.output.find("line 2"), std::string::npos) << o.output;

  auto empty_line = TempFile("segdisc_cli_empty.txt", "a b\n\nc\n");
  EXPECT_EQ(Invoke("segment --corpus " + empty_line.string() + " --order 1").status, 1);

  EXPECT_EQ(Invoke("segment --corpus /nonexistent/corpus.txt --order 1").status, 1);
  EXPECT_EQ(Invoke("segment --corpus " + kFixture + " --order 4").status, 1);
  EXPECT_EQ(Invoke("segment --corpus " + kFixture + " --order 1 --phoneme-mode loud").status, 1);
  EXPECT_EQ(Invoke("eval --corpus " + kFixture + " --order 1 --train-frac 2").status, 1);
  EXPECT_EQ(Invoke("bogus").status, 1);
  EXPECT_EQ(Invoke("eval --order 1").status, 1);
  EXPECT_EQ(Invoke("eval --corpus " + kFixture).status, 1);
}

TEST(CliTest, ThreadVariable) {
  Outcome a = Invoke("permute-average --corpus " + kFixture + " --order 1 --runs 4");
  Outcome b = Invoke("permute-average --corpus " + kFixture + " --order 1 --runs 4",
                  "SEGDISC_THREADS=1 ");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.output, b.output);
  EXPECT_EQ(Invoke("permute-average --corpus " + kFixture + " --order 1", "SEGDISC_THREADS=0 ")
                .status,
            1);
}

}  // namespace
