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

#include "fftp/fft.hpp"

#include <cmath>
#include <numbers>

#include "fftp/error.hpp"
#include "fftp/simd/kernels.hpp"

namespace fftp {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Fft::Fft(std::size_t n) : n_(n) {
  if (n == 0) throw ParameterError("FFT length must be positive");

  if (is_power_of_two(n)) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    bitrev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1U) << (bits - 1 - b);
      bitrev_[i] = r;
    }
    twiddles_.reserve(n > 1 ? n - 1 : 0);
    for (std::size_t half = 1; half < n; half *= 2) {
      const double step = -std::numbers::pi / static_cast<double>(half);
      for (std::size_t k = 0; k < half; ++k) {
        const double angle = step * static_cast<double>(k);
        twiddles_.emplace_back(std::cos(angle), std::sin(angle));
      }
    }
    return;
  }

  std::size_t m = 1;
  while (m < 2 * n - 1) m *= 2;
  inner_ = std::make_unique<Fft>(m);

  // chirp[k] = exp(-i pi k^2 / n); k^2 is reduced mod 2n first so the angle
  // stays small and exact for large k.
  chirp_.resize(n);
  const std::size_t period = 2 * n;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t k2 = (k * k) % period;
    const double angle =
        -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
    chirp_[k] = {std::cos(angle), std::sin(angle)};
  }
  kernel_spectrum_.assign(m, cdouble{});
  kernel_spectrum_[0] = std::conj(chirp_[0]);
  for (std::size_t k = 1; k < n; ++k) {
    kernel_spectrum_[k] = std::conj(chirp_[k]);
    kernel_spectrum_[m - k] = std::conj(chirp_[k]);
  }
  inner_->forward(kernel_spectrum_);
}

Fft::~Fft() = default;
Fft::Fft(Fft&&) noexcept = default;
Fft& Fft::operator=(Fft&&) noexcept = default;

void Fft::forward(std::span<cdouble> data) const {
  if (data.size() != n_) throw ParameterError("FFT input length mismatch");
  if (inner_) {
    bluestein(data);
  } else {
    radix2(data);
  }
}

void Fft::inverse(std::span<cdouble> data) const {
  for (auto& v : data) v = std::conj(v);
  forward(data);
  for (auto& v : data) v = std::conj(v);
}

void Fft::radix2(std::span<cdouble> data) const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = bitrev_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  const auto& k = simd::active();
  for (std::size_t half = 1; half < n_; half *= 2) {
    k.butterfly(data.data(), n_, half, twiddles_.data() + (half - 1));
  }
}

void Fft::bluestein(std::span<cdouble> data) const {
  const std::size_t m = inner_->size();
  const auto& k = simd::active();
  std::vector<cdouble> work(m, cdouble{});
  k.cmul(data.data(), chirp_.data(), work.data(), n_, false);
  inner_->forward(work);
  k.cmul(work.data(), kernel_spectrum_.data(), work.data(), m, false);
  inner_->inverse(work);
  k.cscale(1.0 / static_cast<double>(m), work.data(), n_);
  k.cmul(work.data(), chirp_.data(), data.data(), n_, false);
}

}  // namespace fftp
