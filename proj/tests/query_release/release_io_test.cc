// Copyright 2026 The ldp-erm Authors
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


#include "ldp/query_release/release_io.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"

namespace ldp::query_release {
namespace {

std::string TempPath(const std::string& name) {
  return (std::filesystem::path(::testing::TempDir()) / name).string();
}

TEST(ReleaseIoTest, RoundTrip) {
  ReleaseFile release;
  release.header = {{"mechanism", "marginals"}, {"p", "8"}, {"gamma", "0.05"}};
  release.values = {0.1, -2.5e-7, 1.0 / 3.0};
  const std::string path = TempPath("release.csv");
  ASSERT_TRUE(WriteRelease(path, release).ok());
  const ReleaseFile back = ReadRelease(path).value();
  EXPECT_EQ(back.header, release.header);
  EXPECT_EQ(back.values, release.values);
}

TEST(ReleaseIoTest, RejectsMalformed) {
  const std::string path = TempPath("bad.csv");
  {
    std::ofstream out(path);
    out << "# p=2\nindex,value\n0,1.0\n2,3.0\n";
  }
  EXPECT_EQ(ReadRelease(path).status().code(), absl::StatusCode::kInvalidArgument);
  {
    std::ofstream out(path);
    out << "# p=2\n";
  }
  EXPECT_FALSE(ReadRelease(path).ok());
  EXPECT_EQ(ReadRelease(TempPath("missing.csv")).status().code(),
            absl::StatusCode::kNotFound);
}

TEST(ReleaseIoTest, Answers) {
  const std::string path = TempPath("answers.csv");
  const std::vector<QueryAnswer> answers = {{"q0", 0.5, 0.5}, {"q1", 1.0, 1.25}};
  ASSERT_TRUE(WriteAnswers(path, answers).ok());
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(s.str(), "query_id,answer,raw_answer\nq0,0.5,0.5\nq1,1,1.25\n");
}

}  // namespace
}  // namespace ldp::query_release
