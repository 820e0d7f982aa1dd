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

#ifndef LDP_PRIMITIVES_RNG_H_
#define LDP_PRIMITIVES_RNG_H_

#include <cstdint>
#include <limits>

namespace ldp {

// Counter-based generator (SplitMix64 finalizer over key + counter).
//
// Streams are derived with Split(tag, index) from a parent key alone, so the
// stream of player i in round `tag` does not depend on how many draws other
// players made or in which order players are simulated. Satisfies
// UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return Mix(key_ + (++counter_) * kGamma); }

  // Child stream; independent of this stream's counter.
  Rng Split(std::uint64_t tag, std::uint64_t index) const;

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Uniform on (0, 1).
  double UniformOpen();
  // Uniform on {0, ..., n - 1}; n must be positive.
  std::uint64_t UniformInt(std::uint64_t n);

  std::uint64_t key() const { return key_; }

  static std::uint64_t Mix(std::uint64_t z);

 private:
  struct FromKey {};
  Rng(FromKey, std::uint64_t key) : key_(key) {}

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Stream tags. Each protocol step draws from its own tag so adding a step
// never perturbs the randomness of another.
namespace rng_tags {
inline constexpr std::uint64_t kLdpAvg1d = 0x11;
inline constexpr std::uint64_t kLdpAvgVec = 0x12;
inline constexpr std::uint64_t kOneBitPublic = 0x21;
inline constexpr std::uint64_t kOneBitPlayer = 0x22;
inline constexpr std::uint64_t kPartition = 0x23;
inline constexpr std::uint64_t kGridLaplace = 0x31;
inline constexpr std::uint64_t kMinimizeStarts = 0x32;
inline constexpr std::uint64_t kGlmEncode = 0x41;
inline constexpr std::uint64_t kGlmServer = 0x42;
inline constexpr std::uint64_t kQuerySampling = 0x51;
inline constexpr std::uint64_t kDataset = 0x61;
inline constexpr std::uint64_t kTrial = 0x71;
}  // namespace rng_tags

}  // namespace ldp

#endif  // LDP_PRIMITIVES_RNG_H_
