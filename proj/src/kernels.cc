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

#include "ghzsdc/kernels.h"

#include <atomic>
#include <stdexcept>
#include <string>

#include "kernels_internal.h"

namespace ghzsdc::kernels {
namespace {

constexpr KernelTable kScalarTable{
    detail::scalar_norm_squared,
    detail::scalar_abs_squared,
    detail::scalar_inner_product,
    detail::scalar_apply_1q,
};

#ifdef GHZSDC_HAVE_AVX2
constexpr KernelTable kAvx2Table{
    detail::avx2_norm_squared,
    detail::avx2_abs_squared,
    detail::avx2_inner_product,
    detail::avx2_apply_1q,
};
#endif

bool host_has_avx2() {
#ifdef GHZSDC_HAVE_AVX2
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* detect() {
#ifdef GHZSDC_HAVE_AVX2
  if (host_has_avx2()) {
    return &kAvx2Table;
  }
#endif
  return &kScalarTable;
}

std::atomic<const KernelTable*>& active_table() {
  static std::atomic<const KernelTable*> table{detect()};
  return table;
}

const KernelTable& current() { return *active_table().load(std::memory_order_relaxed); }

const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::kScalar};
  if (host_has_avx2()) {
    out.push_back(Backend::kAvx2);
  }
  return out;
}

const KernelTable& table_for(Backend b) {
  if (b == Backend::kScalar) {
    return kScalarTable;
  }
#ifdef GHZSDC_HAVE_AVX2
  if (host_has_avx2()) {
    return kAvx2Table;
  }
#endif
  throw std::invalid_argument("kernel backend not available: " + std::string(backend_name(b)));
}

Backend active_backend() {
  return &current() == &kScalarTable ? Backend::kScalar : Backend::kAvx2;
}

void set_backend(Backend b) { active_table().store(&table_for(b), std::memory_order_relaxed); }

double norm_squared(std::span<const cplx> v) {
  return current().norm_squared(as_doubles(v.data()), v.size());
}

void abs_squared(std::span<const cplx> v, std::span<double> out) {
  if (out.size() != v.size()) {
    throw std::invalid_argument("abs_squared: output length mismatch");
  }
  current().abs_squared(as_doubles(v.data()), out.data(), v.size());
}

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner_product: length mismatch");
  }
  double out[2];
  current().inner_product(as_doubles(a.data()), as_doubles(b.data()), a.size(), out);
  return {out[0], out[1]};
}

void apply_1q(std::span<cplx> v, unsigned bit, const cplx (&m)[4]) {
  if ((std::size_t{2} << bit) > v.size()) {
    throw std::invalid_argument("apply_1q: bit position out of range");
  }
  current().apply_1q(as_doubles(v.data()), v.size(), bit, as_doubles(&m[0]));
}

}  // namespace ghzsdc::kernels
