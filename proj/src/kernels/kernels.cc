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

#include "ldp/kernels/kernels.h"

#include <cassert>
#include <cstdlib>
#include <string_view>

namespace ldp::kernels {

#ifdef LDP_ERM_HAVE_AVX2
// Defined in kernels_avx2.cc, which is the only translation unit compiled
// with -mavx2 -mfma.
const KernelTable& Avx2KernelTableUnchecked();
#endif

namespace {

double ScalarDot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double ScalarSum(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

void ScalarAxpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void ScalarGemv(const double* m, std::size_t rows, std::size_t cols,
                const double* x, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    out[r] = ScalarDot(m + r * cols, x, cols);
  }
}

constexpr KernelTable kScalar{"scalar", &ScalarDot, &ScalarSum, &ScalarAxpy,
                              &ScalarGemv};

bool CpuHasAvx2Fma() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& SelectKernels() {
  const char* forced = std::getenv("LDP_ERM_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    return kScalar;
  }
  const KernelTable* avx2 = Avx2Kernels();
  return avx2 != nullptr ? *avx2 : kScalar;
}

}  // namespace

const KernelTable& ScalarKernels() { return kScalar; }

const KernelTable* Avx2Kernels() {
#ifdef LDP_ERM_HAVE_AVX2
  static const bool supported = CpuHasAvx2Fma();
  return supported ? &Avx2KernelTableUnchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& ActiveKernels() {
  static const KernelTable& active = SelectKernels();
  return active;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return ActiveKernels().dot(a.data(), b.data(), a.size());
}

double Sum(std::span<const double> a) {
  return ActiveKernels().sum(a.data(), a.size());
}

void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  ActiveKernels().axpy(alpha, x.data(), y.data(), x.size());
}

void Gemv(std::span<const double> m, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> out) {
  assert(m.size() == rows * cols);
  assert(x.size() == cols);
  assert(out.size() == rows);
  ActiveKernels().gemv(m.data(), rows, cols, x.data(), out.data());
}

}  // namespace ldp::kernels
