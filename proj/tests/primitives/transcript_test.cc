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


#include "ldp/primitives/transcript.h"

#include <sstream>
#include <vector>

#include "gtest/gtest.h"

namespace ldp {
namespace {

TEST(TranscriptTest, CsvLayout) {
  Transcript t;
  const std::vector<double> reals = {0.5, -1.25};
  t.RecordReals(0, reals);
  t.RecordBit(1, 1);
  std::ostringstream out;
  t.WriteCsv(out);
  EXPECT_EQ(out.str(),
            "player_index,message_bits,payload\n"
            "0,128,0.5;-1.25\n"
            "1,1,1\n");
}

TEST(TranscriptTest, CountsWithoutKeepingEntries) {
  Transcript t(/*keep_entries=*/false);
  for (int i = 0; i < 10; ++i) t.RecordBit(i, i % 2);
  EXPECT_TRUE(t.entries().empty());
  EXPECT_EQ(t.total_bits(), 10u);
  EXPECT_DOUBLE_EQ(t.BitsPerPlayer(), 1.0);
}

}  // namespace
}  // namespace ldp
