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

#ifndef GHZSDC_LINALG_H
#define GHZSDC_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ghzsdc {

using cplx = std::complex<double>;

/// Dense row-major square complex matrix. Small operators only (Kraus
/// operators, single-qubit gates); density operators have their own type.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  CMatrix(std::size_t dim, std::initializer_list<cplx> row_major);

  static CMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return data_; }

  CMatrix adjoint() const;
  CMatrix conj() const;
  CMatrix operator*(const CMatrix& rhs) const;
  CMatrix operator+(const CMatrix& rhs) const;
  CMatrix operator*(cplx s) const;

  /// Largest entrywise modulus of (this - rhs).
  double max_abs_diff(const CMatrix& rhs) const;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// this (x) rhs, with `lhs` acting on the more significant index bits.
CMatrix kron(const CMatrix& lhs, const CMatrix& rhs);

namespace gates {
CMatrix I();
CMatrix X();
CMatrix Y();
CMatrix Z();
CMatrix H();
}  // namespace gates

}  // namespace ghzsdc

#endif  // GHZSDC_LINALG_H
