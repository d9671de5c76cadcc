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

#ifndef GHZSDC_SRC_KERNELS_INTERNAL_H
#define GHZSDC_SRC_KERNELS_INTERNAL_H

#include <cstddef>

// Kept free of standard library templates so the AVX2 translation unit cannot
// leak vector instructions into inline functions shared with baseline code.
namespace ghzsdc::kernels::detail {

double scalar_norm_squared(const double* v, std::size_t n);
void scalar_abs_squared(const double* v, double* out, std::size_t n);
void scalar_inner_product(const double* a, const double* b, std::size_t n, double* out);
void scalar_apply_1q(double* v, std::size_t n, unsigned bit, const double* m);

double avx2_norm_squared(const double* v, std::size_t n);
void avx2_abs_squared(const double* v, double* out, std::size_t n);
void avx2_inner_product(const double* a, const double* b, std::size_t n, double* out);
void avx2_apply_1q(double* v, std::size_t n, unsigned bit, const double* m);

}  // namespace ghzsdc::kernels::detail

#endif  // GHZSDC_SRC_KERNELS_INTERNAL_H
