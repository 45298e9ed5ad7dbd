// Copyright 2026 The fftprocrustes Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace fftp::simd {

using cdouble = std::complex<double>;

enum class Backend { kScalar, kAvx2 };

/// Table of data-parallel inner loops. Every backend implements the same
/// contract; the scalar table is the reference the others are tested against.
struct Kernels {
  Backend backend;
  std::string_view name;

  /// One radix-2 decimation-in-time pass over `n` points: for every block of
  /// 2*half points, a[k], a[k+half] <- a[k] + w[k]*a[k+half], a[k] - w[k]*a[k+half].
  void (*butterfly)(cdouble* data, std::size_t n, std::size_t half,
                    const cdouble* twiddles);

  /// out[i] = a[i] * b[i], or a[i] * conj(b[i]) when conj_b is set.
  void (*cmul)(const cdouble* a, const cdouble* b, cdouble* out, std::size_t n,
               bool conj_b);

  /// sum conj(a[i]) * b[i]
  cdouble (*cdot)(const cdouble* a, const cdouble* b, std::size_t n);

  double (*cnorm2)(const cdouble* a, std::size_t n);

  /// y[i] += alpha * x[i]
  void (*caxpy)(cdouble alpha, const cdouble* x, cdouble* y, std::size_t n);

  /// x[i] *= alpha
  void (*cscale)(double alpha, cdouble* x, std::size_t n);

  double (*dot)(const double* a, const double* b, std::size_t n);

  /// sum (a[i] - b[i])^2
  double (*sqdiff)(const double* a, const double* b, std::size_t n);

  /// y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

const Kernels& scalar_kernels();

/// AVX2+FMA table, or nullptr when the build or the CPU lacks support.
const Kernels* avx2_kernels();

/// Kernels used by the library. Chosen once from CPU features; the
/// FFTP_SIMD environment variable ("scalar" or "avx2") overrides the choice.
const Kernels& active();

/// Forces a backend for the rest of the process. Returns false (and leaves
/// the selection unchanged) when the backend is unavailable.
bool select_backend(Backend backend);

}  // namespace fftp::simd
