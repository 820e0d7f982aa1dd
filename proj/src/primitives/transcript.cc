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

#include <algorithm>

#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"

namespace ldp {

void Transcript::Count(std::uint64_t player_index, std::uint32_t bits,
                       std::uint32_t reals) {
  ++num_messages_;
  total_bits_ += bits;
  total_reals_ += reals;
  num_players_ = std::max(num_players_, player_index + 1);
}

void Transcript::RecordReals(std::uint64_t player_index,
                             std::span<const double> reals,
                             std::uint32_t extra_bits) {
  const auto count = static_cast<std::uint32_t>(reals.size());
  const std::uint32_t bits = count * kBitsPerReal + extra_bits;
  Count(player_index, bits, count);
  if (!keep_entries_) return;
  std::string payload = absl::StrJoin(
      reals, ";", [](std::string* out, double x) {
        absl::StrAppendFormat(out, "%.17g", x);
      });
  entries_.push_back({player_index, bits, count, std::move(payload)});
}

void Transcript::RecordBit(std::uint64_t player_index, int bit) {
  Count(player_index, 1, 0);
  if (!keep_entries_) return;
  entries_.push_back({player_index, 1, 0, bit != 0 ? "1" : "0"});
}

double Transcript::BitsPerPlayer() const {
  if (num_players_ == 0) return 0.0;
  return static_cast<double>(total_bits_) / static_cast<double>(num_players_);
}

double Transcript::RealsPerPlayer() const {
  if (num_players_ == 0) return 0.0;
  return static_cast<double>(total_reals_) / static_cast<double>(num_players_);
}

void Transcript::WriteCsv(std::ostream& out) const {
  out << "player_index,message_bits,payload\n";
  for (const TranscriptEntry& e : entries_) {
    out << e.player_index << ',' << e.message_bits << ',' << e.payload << '\n';
  }
}

}  // namespace ldp
