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

// Dense double-precision kernels used in the inner loops of the mechanisms:
// dot products, reductions, axpy and row-major matrix-vector products.
//
// Every kernel has a scalar reference implementation and, when the build and
// the CPU allow it, an AVX2/FMA variant. The variant is chosen once at first
// use. Setting LDP_ERM_SIMD=scalar in the environment forces the reference
// path; results then are bit-identical across machines.

#ifndef LDP_KERNELS_KERNELS_H_
#define LDP_KERNELS_KERNELS_H_

#include <cstddef>
#include <span>
#include <string_view>

namespace ldp::kernels {

struct KernelTable {
  std::string_view name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum)(const double* a, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // out[r] = sum_c m[r * cols + c] * x[c]
  void (*gemv)(const double* m, std::size_t rows, std::size_t cols,
               const double* x, double* out);
};

const KernelTable& ScalarKernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks
// AVX2+FMA.
const KernelTable* Avx2Kernels();

// The table selected for this process.
const KernelTable& ActiveKernels();

double Dot(std::span<const double> a, std::span<const double> b);
double Sum(std::span<const double> a);
void Axpy(double alpha, std::span<const double> x, std::span<double> y);
void Gemv(std::span<const double> m, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> out);

}  // namespace ldp::kernels

#endif  // LDP_KERNELS_KERNELS_H_
