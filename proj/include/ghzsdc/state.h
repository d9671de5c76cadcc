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

#ifndef GHZSDC_STATE_H
#define GHZSDC_STATE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghzsdc/linalg.h"

namespace ghzsdc {

// Basis index convention used throughout: bit k of a computational basis
// index is the value of qubit k. Qubit 0 is the sender's retained qubit,
// qubits 1..n-1 are travel qubits in partner order. Kets are printed with
// qubit 0 leftmost, so index 1 of a 3-qubit register prints as |100>.

inline constexpr unsigned kMaxQubits = 16;
/// Dense density operators hold 4^n amplitudes; beyond this they stop fitting
/// comfortably in memory.
inline constexpr unsigned kMaxDensityQubits = 10;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kNegativeEigenTolerance = 1e-9;

enum class Basis { kZ, kX };

std::string to_string(Basis b);
/// Accepts "Bz"/"Bx" (case-insensitive, with or without the leading B).
Basis parse_basis(const std::string& s);

/// Renders `index` as a ket string, qubit 0 first.
std::string ket_label(std::uint64_t index, unsigned n_qubits);

class PureState {
 public:
  /// Validates length 2^n and unit norm within kNormTolerance.
  PureState(unsigned n_qubits, std::vector<cplx> amplitudes);

  static PureState basis_state(unsigned n_qubits, std::uint64_t index);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  cplx amplitude(std::uint64_t index) const { return amplitudes_.at(index); }

  double norm_squared() const;

 private:
  struct Unchecked {};
  PureState(Unchecked, unsigned n_qubits, std::vector<cplx> amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}
  friend PureState apply_gate(const PureState&, unsigned, const CMatrix&);
  friend PureState apply_matrix(const PureState&, std::span<const unsigned>, const CMatrix&);
  friend PureState renormalized(unsigned, std::vector<cplx>);

  unsigned n_qubits_;
  std::vector<cplx> amplitudes_;
};

/// Normalizes a nonzero vector and wraps it as a state.
PureState renormalized(unsigned n_qubits, std::vector<cplx> amplitudes);

/// Single-qubit gate `u` on `qubit`.
PureState apply_gate(const PureState& state, unsigned qubit, const CMatrix& u);

/// Matrix on the listed qubits. Local index bit j of `m` is qubit targets[j].
/// `m` need not be unitary; the result is not renormalized.
PureState apply_matrix(const PureState& state, std::span<const unsigned> targets, const CMatrix& m);

/// <a|b>.
cplx inner_product(const PureState& a, const PureState& b);

// Row-major storage, viewed as a 2n-qubit vector when applying operators:
// row qubit k is bit n+k and column qubit k is bit k of the flat index.
class DensityOperator {
 public:
  /// Validates shape, Hermiticity, unit trace and eigenvalue floor.
  DensityOperator(unsigned n_qubits, std::vector<cplx> row_major);

  static DensityOperator from_pure(const PureState& psi);
  static DensityOperator maximally_mixed(unsigned n_qubits);
  /// sum_i weights[i] |states[i]><states[i]|. Weights must sum to 1.
  static DensityOperator mixture(std::span<const double> weights, std::span<const PureState> states);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  cplx operator()(std::size_t r, std::size_t c) const { return data_[(r << n_qubits_) | c]; }
  std::span<const cplx> data() const { return data_; }

  cplx trace() const;
  /// Largest |rho_rc - conj(rho_cr)|.
  double hermiticity_error() const;
  double max_abs_diff(const DensityOperator& other) const;

  /// U rho U^dagger for a single-qubit unitary on `qubit`.
  DensityOperator conjugate(unsigned qubit, const CMatrix& u) const;

  /// Skips validation. For operators that are valid by construction, such as
  /// channel outputs.
  static DensityOperator from_trusted(unsigned n_qubits, std::vector<cplx> row_major);

 private:
  struct Unchecked {};
  DensityOperator(Unchecked, unsigned n_qubits, std::vector<cplx> row_major)
      : n_qubits_(n_qubits), data_(std::move(row_major)) {}

  unsigned n_qubits_;
  std::vector<cplx> data_;
};

/// Throws ValidationError if rho violates the density operator invariants.
/// The eigenvalue check is the expensive part and can be skipped.
void validate_density(const DensityOperator& rho, bool check_spectrum = true);

/// (|0...0> + |1...1>)/sqrt(2). 1 <= n <= 16.
PureState ghz_state(unsigned n);

/// Equal superposition of the n single-excitation basis states. 2 <= n <= 16.
PureState w_state(unsigned n);

/// One element of the GHZ-type basis: (|x> + sign |~x>)/sqrt(2).
struct GhzBasisElement {
  std::uint64_t x;
  std::uint64_t x_complement;
  int sign;  // +1 or -1
};

/// Describes element `index` of the GHZ-type basis on n qubits.
///
/// Each complementary pair {x, ~x} is represented by the member with fewer
/// ones; on a tie (even n only) by the smaller integer index, i.e. the one
/// whose highest qubit is 0. Pairs are ordered by ascending representative
/// index, and within a pair the + combination comes first. For n = 3 this
/// yields (|000>+|111>), (|000>-|111>), (|100>+|011>), (|100>-|011>),
/// (|010>+|101>), (|010>-|101>), (|001>+|110>), (|001>-|110>).
GhzBasisElement ghz_basis_element(unsigned n, std::uint64_t index);

/// Amplitude vector of ghz_basis_element(n, index). 2 <= n <= 16.
PureState ghz_basis_state(unsigned n, std::uint64_t index);

/// All 2^n GHZ-type basis states in the order above. Materializing the full
/// list costs 4^n amplitudes, so 2 <= n <= kMaxDensityQubits.
std::vector<PureState> ghz_basis(unsigned n);

/// Human readable form such as "(|100>-|011>)/sqrt2".
std::string ghz_basis_label(unsigned n, std::uint64_t index);

/// <phi_index|rho|phi_index>, read directly from four matrix entries.
double ghz_basis_weight(const DensityOperator& rho, std::uint64_t index);

}  // namespace ghzsdc

#endif  // GHZSDC_STATE_H
