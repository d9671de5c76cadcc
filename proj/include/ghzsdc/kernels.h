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

#ifndef GHZSDC_KERNELS_H
#define GHZSDC_KERNELS_H

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Inner-loop arithmetic over dense complex amplitude buffers. Every kernel has
// a portable scalar reference implementation; on x86-64 an AVX2+FMA variant is
// selected at startup when the host supports it. Results of the two backends
// agree to within floating point reassociation error.
namespace ghzsdc::kernels {

using cplx = std::complex<double>;

enum class Backend { kScalar, kAvx2 };

std::string_view backend_name(Backend b);

/// Backends compiled in and supported by the running CPU.
std::vector<Backend> available_backends();

Backend active_backend();

/// Switches the process-wide backend. Throws std::invalid_argument if the
/// backend is not available on this host.
void set_backend(Backend b);

/// Sum of |v_i|^2.
double norm_squared(std::span<const cplx> v);

/// out[i] = |v[i]|^2. Spans must have equal length.
void abs_squared(std::span<const cplx> v, std::span<double> out);

/// Sum of conj(a_i) * b_i.
cplx inner_product(std::span<const cplx> a, std::span<const cplx> b);

/// Applies the row-major 2x2 matrix m to bit position `bit` of the buffer,
/// viewing v as a tensor with v.size() a power of two.
void apply_1q(std::span<cplx> v, unsigned bit, const cplx (&m)[4]);

// Raw per-backend entry points, exposed for equivalence tests and benchmarks.
struct KernelTable {
  double (*norm_squared)(const double* v, std::size_t n_complex);
  void (*abs_squared)(const double* v, double* out, std::size_t n_complex);
  void (*inner_product)(const double* a, const double* b, std::size_t n_complex, double* out_re_im);
  void (*apply_1q)(double* v, std::size_t n_complex, unsigned bit, const double* m);
};

const KernelTable& table_for(Backend b);

}  // namespace ghzsdc::kernels

#endif  // GHZSDC_KERNELS_H
