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

#include <immintrin.h>

#include "backends.hpp"

namespace fftp::simd::detail {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d load2(const cdouble* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(cdouble* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// Same operation order as the scalar kernel so butterflies and pointwise
// products stay bit-identical across backends.
inline __m256d cmul2(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);
  return _mm256_addsub_pd(_mm256_mul_pd(a, b_re), _mm256_mul_pd(a_swap, b_im));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline cdouble mul1(cdouble a, cdouble b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

void butterfly_avx2(cdouble* data, std::size_t n, std::size_t half,
                    const cdouble* twiddles) {
  const std::size_t len = 2 * half;
  if (half < 2) {
    for (std::size_t start = 0; start < n; start += len) {
      const cdouble u = data[start];
      const cdouble v = mul1(data[start + 1], twiddles[0]);
      data[start] = {u.real() + v.real(), u.imag() + v.imag()};
      data[start + 1] = {u.real() - v.real(), u.imag() - v.imag()};
    }
    return;
  }
  for (std::size_t start = 0; start < n; start += len) {
    cdouble* lo = data + start;
    cdouble* hi = lo + half;
    for (std::size_t k = 0; k < half; k += 2) {
      const __m256d u = load2(lo + k);
      const __m256d v = cmul2(load2(hi + k), load2(twiddles + k));
      store2(lo + k, _mm256_add_pd(u, v));
      store2(hi + k, _mm256_sub_pd(u, v));
    }
  }
}

void cmul_avx2(const cdouble* a, const cdouble* b, cdouble* out, std::size_t n,
               bool conj_b) {
  const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vb = load2(b + i);
    if (conj_b) vb = _mm256_xor_pd(vb, conj_mask);
    store2(out + i, cmul2(load2(a + i), vb));
  }
  for (; i < n; ++i) {
    const cdouble bb = conj_b ? cdouble{b[i].real(), -b[i].imag()} : b[i];
    out[i] = mul1(a[i], bb);
  }
}

cdouble cdot_avx2(const cdouble* a, const cdouble* b, std::size_t n) {
  // direct: (ar*br, ai*bi); cross: (ai*br, ar*bi)
  __m256d direct = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = load2(a + i);
    const __m256d vb = load2(b + i);
    direct = _mm256_fmadd_pd(va, vb, direct);
    cross = _mm256_fmadd_pd(_mm256_permute_pd(va, 0x5), vb, cross);
  }
  alignas(32) double c[4];
  _mm256_store_pd(c, cross);
  double re = hsum(direct);
  double im = (c[1] - c[0]) + (c[3] - c[2]);
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double sumsq(const double* p, std::size_t count) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __m256d x0 = _mm256_loadu_pd(p + i);
    const __m256d x1 = _mm256_loadu_pd(p + i + 4);
    acc0 = _mm256_fmadd_pd(x0, x0, acc0);
    acc1 = _mm256_fmadd_pd(x1, x1, acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < count; ++i) acc += p[i] * p[i];
  return acc;
}

double cnorm2_avx2(const cdouble* a, std::size_t n) {
  return sumsq(reinterpret_cast<const double*>(a), 2 * n);
}

void caxpy_avx2(cdouble alpha, const cdouble* x, cdouble* y, std::size_t n) {
  const __m256d va = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(),
                                    alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul2(va, load2(x + i))));
  }
  for (; i < n; ++i) {
    const cdouble t = mul1(alpha, x[i]);
    y[i] = {y[i].real() + t.real(), y[i].imag() + t.imag()};
  }
}

void cscale_avx2(double alpha, cdouble* x, std::size_t n) {
  double* p = reinterpret_cast<double*>(x);
  const std::size_t count = 2 * n;
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    _mm256_storeu_pd(p + i, _mm256_mul_pd(va, _mm256_loadu_pd(p + i)));
  }
  for (; i < count; ++i) p[i] *= alpha;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sqdiff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double total = hsum(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    total += d * d;
  }
  return total;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Kernels& avx2_table() {
  static const Kernels table{
      Backend::kAvx2, "avx2",      butterfly_avx2, cmul_avx2,
      cdot_avx2,      cnorm2_avx2, caxpy_avx2,     cscale_avx2,
      dot_avx2,       sqdiff_avx2, axpy_avx2,
  };
  return table;
}

}  // namespace fftp::simd::detail
