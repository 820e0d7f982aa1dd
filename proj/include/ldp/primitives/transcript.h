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

#ifndef LDP_PRIMITIVES_TRANSCRIPT_H_
#define LDP_PRIMITIVES_TRANSCRIPT_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ldp {

// Bits charged for one real-valued message.
inline constexpr std::uint32_t kBitsPerReal = 64;

struct TranscriptEntry {
  std::uint64_t player_index = 0;
  std::uint32_t message_bits = 0;
  std::uint32_t reals = 0;
  std::string payload;
};

// Record of what players sent. With keep_entries == false only the totals are
// tracked, which is what the large runs use.
class Transcript {
 public:
  explicit Transcript(bool keep_entries = true) : keep_entries_(keep_entries) {}

  void RecordReals(std::uint64_t player_index, std::span<const double> reals,
                   std::uint32_t extra_bits = 0);
  void RecordBit(std::uint64_t player_index, int bit);

  std::uint64_t num_messages() const { return num_messages_; }
  std::uint64_t total_bits() const { return total_bits_; }
  std::uint64_t total_reals() const { return total_reals_; }
  // Per distinct player; players are counted by their largest index + 1.
  double BitsPerPlayer() const;
  double RealsPerPlayer() const;

  const std::vector<TranscriptEntry>& entries() const { return entries_; }

  // Header `player_index,message_bits,payload`, one row per message.
  void WriteCsv(std::ostream& out) const;

 private:
  void Count(std::uint64_t player_index, std::uint32_t bits,
             std::uint32_t reals);

  bool keep_entries_;
  std::uint64_t num_messages_ = 0;
  std::uint64_t total_bits_ = 0;
  std::uint64_t total_reals_ = 0;
  std::uint64_t num_players_ = 0;
  std::vector<TranscriptEntry> entries_;
};

}  // namespace ldp

#endif  // LDP_PRIMITIVES_TRANSCRIPT_H_
