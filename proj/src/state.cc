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

#include "ghzsdc/state.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <string>

#include "ghzsdc/channel.h"
#include "ghzsdc/errors.h"
#include "ghzsdc/kernels.h"
#include "ops_internal.h"

namespace ghzsdc {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_qubits(unsigned n, unsigned lo, unsigned hi, const char* what) {
  if (n < lo || n > hi) {
    throw SizeError(std::string(what) + ": qubit count " + std::to_string(n) + " outside [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

std::uint64_t all_ones(unsigned n) { return (std::uint64_t{1} << n) - 1; }

// Representative member of the complementary pair containing x.
std::uint64_t pair_representative(std::uint64_t x, unsigned n) {
  const std::uint64_t y = x ^ all_ones(n);
  const int wx = std::popcount(x);
  const int wy = std::popcount(y);
  if (wx != wy) {
    return wx < wy ? x : y;
  }
  return std::min(x, y);
}

}  // namespace

std::string to_string(Basis b) { return b == Basis::kZ ? "Bz" : "Bx"; }

Basis parse_basis(const std::string& s) {
  std::string t;
  for (char ch : s) {
    t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (t == "bz" || t == "z") {
    return Basis::kZ;
  }
  if (t == "bx" || t == "x") {
    return Basis::kX;
  }
  throw ValidationError("unknown basis '" + s + "' (expected Bz or Bx)");
}

std::string ket_label(std::uint64_t index, unsigned n_qubits) {
  std::string out = "|";
  for (unsigned k = 0; k < n_qubits; ++k) {
    out.push_back(((index >> k) & 1U) ? '1' : '0');
  }
  out.push_back('>');
  return out;
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(unsigned n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubits(n_qubits_, 1, kMaxQubits, "PureState");
  if (amplitudes_.size() != (std::size_t{1} << n_qubits_)) {
    throw ValidationError("PureState: expected " + std::to_string(std::size_t{1} << n_qubits_) +
                          " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  const double norm = norm_squared();
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw ValidationError("PureState: squared norm " + std::to_string(norm) + " is not 1");
  }
}

PureState PureState::basis_state(unsigned n_qubits, std::uint64_t index) {
  check_qubits(n_qubits, 1, kMaxQubits, "basis_state");
  std::vector<cplx> amps(std::size_t{1} << n_qubits);
  amps.at(index) = 1.0;
  return PureState(Unchecked{}, n_qubits, std::move(amps));
}

double PureState::norm_squared() const { return kernels::norm_squared(amplitudes_); }

PureState renormalized(unsigned n_qubits, std::vector<cplx> amplitudes) {
  const double norm = kernels::norm_squared(amplitudes);
  if (!(norm > 0.0)) {
    throw ValidationError("renormalized: zero vector");
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : amplitudes) {
    a *= scale;
  }
  return PureState(n_qubits, std::move(amplitudes));
}

PureState apply_gate(const PureState& state, unsigned qubit, const CMatrix& u) {
  if (qubit >= state.n_qubits() || u.dim() != 2) {
    throw ValidationError("apply_gate: bad qubit index or gate shape");
  }
  std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());
  const cplx m[4] = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
  kernels::apply_1q(amps, qubit, m);
  return PureState(PureState::Unchecked{}, state.n_qubits(), std::move(amps));
}

namespace detail {

std::vector<cplx> apply_matrix_raw(std::span<const cplx> amps, std::span<const unsigned> bits,
                                   const CMatrix& m) {
  const unsigned k = static_cast<unsigned>(bits.size());
  if (m.dim() != (std::size_t{1} << k)) {
    throw ValidationError("operator dimension does not match target count");
  }
  std::uint64_t mask = 0;
  for (unsigned t : bits) {
    if ((std::uint64_t{1} << t) >= amps.size() || ((mask >> t) & 1U)) {
      throw ValidationError("target qubits must be distinct and in range");
    }
    mask |= std::uint64_t{1} << t;
  }
  std::vector<cplx> out(amps.size());
  if (k == 1) {
    std::copy(amps.begin(), amps.end(), out.begin());
    const cplx g[4] = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
    kernels::apply_1q(out, bits[0], g);
    return out;
  }
  const std::size_t local_dim = m.dim();
  std::vector<std::uint64_t> offsets(local_dim);
  for (std::size_t l = 0; l < local_dim; ++l) {
    std::uint64_t off = 0;
    for (unsigned j = 0; j < k; ++j) {
      if ((l >> j) & 1U) {
        off |= std::uint64_t{1} << bits[j];
      }
    }
    offsets[l] = off;
  }
  std::vector<cplx> gathered(local_dim);
  for (std::uint64_t base = 0; base < amps.size(); ++base) {
    if (base & mask) {
      continue;
    }
    for (std::size_t l = 0; l < local_dim; ++l) {
      gathered[l] = amps[base | offsets[l]];
    }
    for (std::size_t r = 0; r < local_dim; ++r) {
      cplx acc{};
      for (std::size_t c = 0; c < local_dim; ++c) {
        acc += m(r, c) * gathered[c];
      }
      out[base | offsets[r]] = acc;
    }
  }
  return out;
}

}  // namespace detail

PureState apply_matrix(const PureState& state, std::span<const unsigned> targets, const CMatrix& m) {
  for (unsigned t : targets) {
    if (t >= state.n_qubits()) {
      throw ValidationError("apply_matrix: target qubit out of range");
    }
  }
  return PureState(PureState::Unchecked{}, state.n_qubits(),
                   detail::apply_matrix_raw(state.amplitudes(), targets, m));
}

cplx inner_product(const PureState& a, const PureState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ValidationError("inner_product: dimension mismatch");
  }
  return kernels::inner_product(a.amplitudes(), b.amplitudes());
}

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator::DensityOperator(unsigned n_qubits, std::vector<cplx> row_major)
    : n_qubits_(n_qubits), data_(std::move(row_major)) {
  check_qubits(n_qubits_, 1, kMaxDensityQubits, "DensityOperator");
  if (data_.size() != dim() * dim()) {
    throw ValidationError("DensityOperator: expected a " + std::to_string(dim()) + "x" +
                          std::to_string(dim()) + " matrix");
  }
  validate_density(*this);
}

DensityOperator DensityOperator::from_trusted(unsigned n_qubits, std::vector<cplx> row_major) {
  check_qubits(n_qubits, 1, kMaxDensityQubits, "DensityOperator");
  return DensityOperator(Unchecked{}, n_qubits, std::move(row_major));
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
  const unsigned n = psi.n_qubits();
  check_qubits(n, 1, kMaxDensityQubits, "DensityOperator");
  const std::size_t d = psi.dim();
  const auto a = psi.amplitudes();
  std::vector<cplx> m(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    if (a[r] == cplx{}) {
      continue;
    }
    for (std::size_t c = 0; c < d; ++c) {
      m[r * d + c] = a[r] * std::conj(a[c]);
    }
  }
  return DensityOperator(Unchecked{}, n, std::move(m));
}

DensityOperator DensityOperator::maximally_mixed(unsigned n_qubits) {
  check_qubits(n_qubits, 1, kMaxDensityQubits, "DensityOperator");
  const std::size_t d = std::size_t{1} << n_qubits;
  std::vector<cplx> m(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    m[i * d + i] = 1.0 / static_cast<double>(d);
  }
  return DensityOperator(Unchecked{}, n_qubits, std::move(m));
}

DensityOperator DensityOperator::mixture(std::span<const double> weights, std::span<const PureState> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw ValidationError("mixture: need one weight per state and at least one state");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw ValidationError("mixture: negative weight");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw ValidationError("mixture: weights sum to " + std::to_string(total));
  }
  const unsigned n = states[0].n_qubits();
  check_qubits(n, 1, kMaxDensityQubits, "DensityOperator");
  const std::size_t d = states[0].dim();
  std::vector<cplx> m(d * d);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].n_qubits() != n) {
      throw ValidationError("mixture: states have different qubit counts");
    }
    if (weights[i] == 0.0) {
      continue;
    }
    const auto a = states[i].amplitudes();
    for (std::size_t r = 0; r < d; ++r) {
      if (a[r] == cplx{}) {
        continue;
      }
      const cplx ar = weights[i] * a[r];
      for (std::size_t c = 0; c < d; ++c) {
        m[r * d + c] += ar * std::conj(a[c]);
      }
    }
  }
  return DensityOperator(Unchecked{}, n, std::move(m));
}

cplx DensityOperator::trace() const {
  cplx t{};
  for (std::size_t i = 0; i < dim(); ++i) {
    t += (*this)(i, i);
  }
  return t;
}

double DensityOperator::hermiticity_error() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = r; c < dim(); ++c) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

double DensityOperator::max_abs_diff(const DensityOperator& other) const {
  if (other.n_qubits_ != n_qubits_) {
    throw ValidationError("max_abs_diff: dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

DensityOperator DensityOperator::conjugate(unsigned qubit, const CMatrix& u) const {
  if (qubit >= n_qubits_ || u.dim() != 2) {
    throw ValidationError("conjugate: bad qubit index or gate shape");
  }
  std::vector<cplx> m = data_;
  const cplx row_gate[4] = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
  const cplx col_gate[4] = {std::conj(u(0, 0)), std::conj(u(0, 1)), std::conj(u(1, 0)),
                            std::conj(u(1, 1))};
  kernels::apply_1q(m, n_qubits_ + qubit, row_gate);
  kernels::apply_1q(m, qubit, col_gate);
  return DensityOperator(Unchecked{}, n_qubits_, std::move(m));
}

void validate_density(const DensityOperator& rho, bool check_spectrum) {
  const double herm = rho.hermiticity_error();
  if (!(herm <= kHermitianTolerance)) {
    throw ValidationError("DensityOperator: not Hermitian (error " + std::to_string(herm) + ")");
  }
  const cplx tr = rho.trace();
  if (!(std::abs(tr - 1.0) <= kTraceTolerance)) {
    throw ValidationError("DensityOperator: trace " + std::to_string(tr.real()) + " is not 1");
  }
  if (check_spectrum) {
    const auto evals = hermitian_eigenvalues(rho);
    if (!evals.empty() && evals.front() < -kNegativeEigenTolerance) {
      throw ValidationError("DensityOperator: negative eigenvalue " + std::to_string(evals.front()));
    }
  }
}

// ---------------------------------------------------------------------------
// Named states

PureState ghz_state(unsigned n) {
  check_qubits(n, 1, kMaxQubits, "ghz_state");
  std::vector<cplx> amps(std::size_t{1} << n);
  amps.front() = kInvSqrt2;
  amps.back() = kInvSqrt2;
  return PureState(n, std::move(amps));
}

PureState w_state(unsigned n) {
  check_qubits(n, 2, kMaxQubits, "w_state");
  std::vector<cplx> amps(std::size_t{1} << n);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (unsigned k = 0; k < n; ++k) {
    amps[std::size_t{1} << k] = a;
  }
  return PureState(n, std::move(amps));
}

GhzBasisElement ghz_basis_element(unsigned n, std::uint64_t index) {
  check_qubits(n, 2, kMaxQubits, "ghz_basis");
  if (index >= (std::uint64_t{1} << n)) {
    throw SizeError("ghz_basis_element: index " + std::to_string(index) + " out of range");
  }
  const std::uint64_t pair = index / 2;
  // The pair-th representative in ascending order.
  std::uint64_t seen = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    if (pair_representative(x, n) != x) {
      continue;
    }
    if (seen == pair) {
      return {x, x ^ all_ones(n), (index % 2 == 0) ? 1 : -1};
    }
    ++seen;
  }
  throw SizeError("ghz_basis_element: unreachable index");
}

PureState ghz_basis_state(unsigned n, std::uint64_t index) {
  const GhzBasisElement e = ghz_basis_element(n, index);
  std::vector<cplx> amps(std::size_t{1} << n);
  amps[e.x] = kInvSqrt2;
  amps[e.x_complement] = e.sign * kInvSqrt2;
  return PureState(n, std::move(amps));
}

std::vector<PureState> ghz_basis(unsigned n) {
  check_qubits(n, 2, kMaxDensityQubits, "ghz_basis");
  std::vector<PureState> out;
  const std::uint64_t dim = std::uint64_t{1} << n;
  out.reserve(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (pair_representative(x, n) != x) {
      continue;
    }
    for (int sign : {1, -1}) {
      std::vector<cplx> amps(dim);
      amps[x] = kInvSqrt2;
      amps[x ^ all_ones(n)] = sign * kInvSqrt2;
      out.emplace_back(n, std::move(amps));
    }
  }
  return out;
}

std::string ghz_basis_label(unsigned n, std::uint64_t index) {
  const GhzBasisElement e = ghz_basis_element(n, index);
  return "(" + ket_label(e.x, n) + (e.sign > 0 ? "+" : "-") + ket_label(e.x_complement, n) + ")/sqrt2";
}

double ghz_basis_weight(const DensityOperator& rho, std::uint64_t index) {
  const GhzBasisElement e = ghz_basis_element(rho.n_qubits(), index);
  const cplx w = 0.5 * (rho(e.x, e.x) + rho(e.x_complement, e.x_complement) +
                        static_cast<double>(e.sign) * (rho(e.x, e.x_complement) + rho(e.x_complement, e.x)));
  return w.real();
}

}  // namespace ghzsdc
