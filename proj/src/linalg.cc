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

#include "ghzsdc/linalg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ghzsdc {

CMatrix::CMatrix(std::size_t dim, std::initializer_list<cplx> row_major) : dim_(dim), data_(row_major) {
  if (data_.size() != dim * dim) {
    throw std::invalid_argument("CMatrix: initializer size does not match dimension");
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

CMatrix CMatrix::conj() const {
  CMatrix out(*this);
  for (auto& x : out.data_) {
    x = std::conj(x);
  }
  return out;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (rhs.dim_ != dim_) {
    throw std::invalid_argument("CMatrix: dimension mismatch in product");
  }
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const cplx a = (*this)(r, k);
      if (a == cplx{}) {
        continue;
      }
      for (std::size_t c = 0; c < dim_; ++c) {
        out(r, c) += a * rhs(k, c);
      }
    }
  }
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
  if (rhs.dim_ != dim_) {
    throw std::invalid_argument("CMatrix: dimension mismatch in sum");
  }
  CMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] += rhs.data_[i];
  }
  return out;
}

CMatrix CMatrix::operator*(cplx s) const {
  CMatrix out(*this);
  for (auto& x : out.data_) {
    x *= s;
  }
  return out;
}

double CMatrix::max_abs_diff(const CMatrix& rhs) const {
  if (rhs.dim_ != dim_) {
    throw std::invalid_argument("CMatrix: dimension mismatch in comparison");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - rhs.data_[i]));
  }
  return worst;
}

CMatrix kron(const CMatrix& lhs, const CMatrix& rhs) {
  const std::size_t a = lhs.dim();
  const std::size_t b = rhs.dim();
  CMatrix out(a * b);
  for (std::size_t r1 = 0; r1 < a; ++r1) {
    for (std::size_t c1 = 0; c1 < a; ++c1) {
      for (std::size_t r2 = 0; r2 < b; ++r2) {
        for (std::size_t c2 = 0; c2 < b; ++c2) {
          out(r1 * b + r2, c1 * b + c2) = lhs(r1, c1) * rhs(r2, c2);
        }
      }
    }
  }
  return out;
}

namespace gates {
namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}
CMatrix I() { return CMatrix::identity(2); }
CMatrix X() { return CMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
CMatrix Y() { return CMatrix(2, {0.0, cplx(0, -1), cplx(0, 1), 0.0}); }
CMatrix Z() { return CMatrix(2, {1.0, 0.0, 0.0, -1.0}); }
CMatrix H() { return CMatrix(2, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}); }
}  // namespace gates

}  // namespace ghzsdc
