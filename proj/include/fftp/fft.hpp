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

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fftp/grid.hpp"

namespace fftp {

/// Unnormalized 1D discrete Fourier transform of a fixed length.
///
/// Powers of two run an iterative radix-2 decimation-in-time transform whose
/// butterfly passes go through the active SIMD kernels. Every other length is
/// reduced to a power-of-two circular convolution (Bluestein's chirp-z
/// identity). A plan is immutable after construction and may be shared
/// between threads.
class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(Fft&&) noexcept;
  Fft& operator=(Fft&&) noexcept;

  std::size_t size() const { return n_; }

  /// X[k] = sum_n x[n] exp(-2 pi i k n / N), in place.
  void forward(std::span<cdouble> data) const;

  /// x[n] = sum_k X[k] exp(+2 pi i k n / N), in place, without the 1/N factor.
  void inverse(std::span<cdouble> data) const;

 private:
  void radix2(std::span<cdouble> data) const;
  void bluestein(std::span<cdouble> data) const;

  std::size_t n_ = 0;
  // radix-2 plan
  std::vector<std::size_t> bitrev_;
  std::vector<cdouble> twiddles_;  // stage with half-size h starts at offset h-1
  // Bluestein plan
  std::vector<cdouble> chirp_;
  std::vector<cdouble> kernel_spectrum_;
  std::unique_ptr<Fft> inner_;
};

bool is_power_of_two(std::size_t n);

}  // namespace fftp
