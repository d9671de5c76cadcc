// Copyright 2026 The ghzsdc Authors
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

#include <immintrin.h>

#include "kernels_internal.h"

namespace ghzsdc::kernels::detail {
namespace {

// Sum of the four lanes.
inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Two packed complex values times a broadcast complex scalar (mr, mi).
inline __m256d cmul(__m256d mr, __m256d mi, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(mr, v, _mm256_mul_pd(mi, swapped));
}

// Two packed complex values times two packed complex values, lane-wise.
inline __m256d cmul_packed(__m256d a, __m256d b) {
  const __m256d ar = _mm256_movedup_pd(a);
  const __m256d ai = _mm256_permute_pd(a, 0b1111);
  const __m256d bs = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bs));
}

}  // namespace

double avx2_norm_squared(const double* v, std::size_t n) {
  const std::size_t len = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256d x0 = _mm256_loadu_pd(v + i);
    const __m256d x1 = _mm256_loadu_pd(v + i + 4);
    acc0 = _mm256_fmadd_pd(x0, x0, acc0);
    acc1 = _mm256_fmadd_pd(x1, x1, acc1);
  }
  for (; i + 4 <= len; i += 4) {
    const __m256d x = _mm256_loadu_pd(v + i);
    acc0 = _mm256_fmadd_pd(x, x, acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < len; ++i) {
    acc += v[i] * v[i];
  }
  return acc;
}

void avx2_abs_squared(const double* v, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(v + 2 * i);
    const __m256d b = _mm256_loadu_pd(v + 2 * i + 4);
    // hadd gives |c0|^2, |c2|^2, |c1|^2, |c3|^2.
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0b11011000));
  }
  for (; i < n; ++i) {
    out[i] = v[2 * i] * v[2 * i] + v[2 * i + 1] * v[2 * i + 1];
  }
}

void avx2_inner_product(const double* a, const double* b, std::size_t n, double* out) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x = _mm256_loadu_pd(a + 2 * i);
    const __m256d y = _mm256_loadu_pd(b + 2 * i);
    acc_re = _mm256_fmadd_pd(x, y, acc_re);
    acc_im = _mm256_fmadd_pd(x, _mm256_permute_pd(y, 0b0101), acc_im);
  }
  alignas(32) double im_lanes[4];
  _mm256_store_pd(im_lanes, acc_im);
  double re = hsum(acc_re);
  double im = (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3]);
  for (; i < n; ++i) {
    const double ar = a[2 * i], ai = a[2 * i + 1];
    const double br = b[2 * i], bi = b[2 * i + 1];
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  out[0] = re;
  out[1] = im;
}

void avx2_apply_1q(double* v, std::size_t n, unsigned bit, const double* m) {
  const std::size_t stride = std::size_t{1} << bit;
  if (n < 2) {
    return;
  }
  if (stride == 1) {
    // Each pair (a0, a1) fills one register.
    const __m256d col0 = _mm256_setr_pd(m[0], m[1], m[4], m[5]);
    const __m256d col1 = _mm256_setr_pd(m[2], m[3], m[6], m[7]);
    for (std::size_t j = 0; j < n; j += 2) {
      const __m256d pair = _mm256_loadu_pd(v + 2 * j);
      const __m256d a0 = _mm256_permute2f128_pd(pair, pair, 0x00);
      const __m256d a1 = _mm256_permute2f128_pd(pair, pair, 0x11);
      const __m256d r = _mm256_add_pd(cmul_packed(col0, a0), cmul_packed(col1, a1));
      _mm256_storeu_pd(v + 2 * j, r);
    }
    return;
  }
  const __m256d m00r = _mm256_set1_pd(m[0]), m00i = _mm256_set1_pd(m[1]);
  const __m256d m01r = _mm256_set1_pd(m[2]), m01i = _mm256_set1_pd(m[3]);
  const __m256d m10r = _mm256_set1_pd(m[4]), m10i = _mm256_set1_pd(m[5]);
  const __m256d m11r = _mm256_set1_pd(m[6]), m11i = _mm256_set1_pd(m[7]);
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t j = base; j < base + stride; j += 2) {
      double* p0 = v + 2 * j;
      double* p1 = v + 2 * (j + stride);
      const __m256d a0 = _mm256_loadu_pd(p0);
      const __m256d a1 = _mm256_loadu_pd(p1);
      const __m256d r0 = _mm256_add_pd(cmul(m00r, m00i, a0), cmul(m01r, m01i, a1));
      const __m256d r1 = _mm256_add_pd(cmul(m10r, m10i, a0), cmul(m11r, m11i, a1));
      _mm256_storeu_pd(p0, r0);
      _mm256_storeu_pd(p1, r1);
    }
  }
}

}  // namespace ghzsdc::kernels::detail
