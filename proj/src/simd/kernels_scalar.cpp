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

#include "fftp/simd/kernels.hpp"

namespace fftp::simd {
namespace {

// Plain component arithmetic; std::complex operator* routes through the
// C99 Annex G NaN-recovery helper, which is slow and changes rounding.
inline cdouble mul(cdouble a, cdouble b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

inline cdouble mul_conj(cdouble a, cdouble b) {
  return {a.real() * b.real() + a.imag() * b.imag(),
          a.imag() * b.real() - a.real() * b.imag()};
}

void butterfly_scalar(cdouble* data, std::size_t n, std::size_t half,
                      const cdouble* twiddles) {
  const std::size_t len = 2 * half;
  for (std::size_t start = 0; start < n; start += len) {
    cdouble* lo = data + start;
    cdouble* hi = lo + half;
    for (std::size_t k = 0; k < half; ++k) {
      const cdouble u = lo[k];
      const cdouble v = mul(hi[k], twiddles[k]);
      lo[k] = {u.real() + v.real(), u.imag() + v.imag()};
      hi[k] = {u.real() - v.real(), u.imag() - v.imag()};
    }
  }
}

void cmul_scalar(const cdouble* a, const cdouble* b, cdouble* out,
                 std::size_t n, bool conj_b) {
  if (conj_b) {
    for (std::size_t i = 0; i < n; ++i) out[i] = mul_conj(a[i], b[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = mul(a[i], b[i]);
  }
}

cdouble cdot_scalar(const cdouble* a, const cdouble* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double cnorm2_scalar(const cdouble* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return acc;
}

void caxpy_scalar(cdouble alpha, const cdouble* x, cdouble* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const cdouble t = mul(alpha, x[i]);
    y[i] = {y[i].real() + t.real(), y[i].imag() + t.imag()};
  }
}

void cscale_scalar(double alpha, cdouble* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = {alpha * x[i].real(), alpha * x[i].imag()};
  }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sqdiff_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels table{
      Backend::kScalar, "scalar",      butterfly_scalar, cmul_scalar,
      cdot_scalar,      cnorm2_scalar, caxpy_scalar,     cscale_scalar,
      dot_scalar,       sqdiff_scalar, axpy_scalar,
  };
  return table;
}

}  // namespace fftp::simd
