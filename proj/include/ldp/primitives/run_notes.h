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

#ifndef LDP_PRIMITIVES_RUN_NOTES_H_
#define LDP_PRIMITIVES_RUN_NOTES_H_

#include <string>
#include <utility>
#include <vector>

namespace ldp {

// Non-fatal conditions observed during a run (thresholds not met, values
// clipped). Collected into the run report rather than failing the run.
class RunNotes {
 public:
  void Warn(std::string message) { warnings_.push_back(std::move(message)); }
  const std::vector<std::string>& warnings() const { return warnings_; }
  bool empty() const { return warnings_.empty(); }

 private:
  std::vector<std::string> warnings_;
};

// Convenience for optional RunNotes* parameters.
inline void Warn(RunNotes* notes, std::string message) {
  if (notes != nullptr) notes->Warn(std::move(message));
}

}  // namespace ldp

#endif  // LDP_PRIMITIVES_RUN_NOTES_H_
