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

#include "kernels_internal.h"

namespace ghzsdc::kernels::detail {

double scalar_norm_squared(const double* v, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    acc += v[i] * v[i];
  }
  return acc;
}

void scalar_abs_squared(const double* v, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = v[2 * i] * v[2 * i] + v[2 * i + 1] * v[2 * i + 1];
  }
}

void scalar_inner_product(const double* a, const double* b, std::size_t n, double* out) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[2 * i], ai = a[2 * i + 1];
    const double br = b[2 * i], bi = b[2 * i + 1];
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  out[0] = re;
  out[1] = im;
}

void scalar_apply_1q(double* v, std::size_t n, unsigned bit, const double* m) {
  const std::size_t stride = std::size_t{1} << bit;
  const double m00r = m[0], m00i = m[1], m01r = m[2], m01i = m[3];
  const double m10r = m[4], m10i = m[5], m11r = m[6], m11i = m[7];
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t j = base; j < base + stride; ++j) {
      double* p0 = v + 2 * j;
      double* p1 = v + 2 * (j + stride);
      const double a0r = p0[0], a0i = p0[1];
      const double a1r = p1[0], a1i = p1[1];
      p0[0] = m00r * a0r - m00i * a0i + m01r * a1r - m01i * a1i;
      p0[1] = m00r * a0i + m00i * a0r + m01r * a1i + m01i * a1r;
      p1[0] = m10r * a0r - m10i * a0i + m11r * a1r - m11i * a1i;
      p1[1] = m10r * a0i + m10i * a0r + m11r * a1i + m11i * a1r;
    }
  }
}

}  // namespace ghzsdc::kernels::detail
