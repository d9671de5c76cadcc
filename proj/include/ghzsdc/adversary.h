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

#ifndef GHZSDC_ADVERSARY_H
#define GHZSDC_ADVERSARY_H

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ghzsdc/linalg.h"
#include "ghzsdc/rng.h"
#include "ghzsdc/state.h"
#include "ghzsdc/transcript.h"

// Eavesdropping strategies, each acting on travel qubits only. Qubit 0 stays
// with the sender and is never touched.
namespace ghzsdc::attack {

struct NoAttack {};

/// Maps the GHZ state onto GHZ-type basis element `index` with X/Z gates on
/// travel qubits.
struct GhzPauli {
  std::uint64_t index = 1;
};

/// Measures the listed qubits in `basis` and resends the eigenstates found.
struct InterceptResend {
  Basis basis = Basis::kZ;
  std::vector<unsigned> qubits;
};

/// Each listed qubit is replaced by I/2 with probability p.
struct Depolarize {
  double p = 0.0;
  std::vector<unsigned> qubits;
};

struct KrausCustom {
  std::vector<CMatrix> kraus_set;
  std::vector<unsigned> qubits;
};

/// The distributed state is swapped for the n-qubit W state.
struct WSubstitution {};

}  // namespace ghzsdc::attack

namespace ghzsdc {

using AttackModel = std::variant<attack::NoAttack, attack::GhzPauli, attack::InterceptResend, attack::Depolarize,
                                 attack::KrausCustom, attack::WSubstitution>;

/// Stable identifier: no_attack, ghz_pauli, intercept_resend, depolarize,
/// kraus, w_substitution.
std::string variant_name(const AttackModel& model);

/// Compact description such as "depolarize(p=0.3,qubits=[1])".
std::string describe(const AttackModel& model);

/// Throws ValidationError (or SizeError) if the model cannot act on n qubits:
/// qubit lists must be non-empty, distinct and within 1..n-1, Kraus sets must
/// be complete, and GhzPauli targets must be reachable from the GHZ state.
void validate_attack(const AttackModel& model, unsigned n);

/// True when applying the attack consumes randomness (sampled trajectories).
bool is_stochastic(const AttackModel& model);

/// X/Z gate list on travel qubits taking the GHZ state to basis element `index`
/// up to a global phase: first the qubits to flip, then the qubit receiving Z
/// (if any).
struct PauliRecipe {
  std::vector<unsigned> x_qubits;
  std::optional<unsigned> z_qubit;
};
PauliRecipe ghz_pauli_recipe(unsigned n, std::uint64_t index);

/// Exact post-attack density operator (the attack's induced channel).
/// `ideal` must be the n-qubit GHZ state.
DensityOperator apply_attack(const AttackModel& model, const PureState& ideal);

struct AttackOutcome {
  JointState state;
  std::optional<EveRecord> record;
};

/// One realization of the attack for protocol simulation. InterceptResend is
/// sampled as a measurement trajectory; other variants are deterministic.
AttackOutcome sample_attack(const AttackModel& model, const PureState& ideal, Rng& rng);

/// Eve's guess of the sent bit from her record and the public yes/no
/// announcement. Only a Bz intercept gives her usable side information;
/// everything else returns nullopt.
std::optional<int> eve_inference(const AttackModel& model, const Round& round);

/// Parses a JSON attack description such as
/// {"variant":"intercept_resend","basis":"Bz","qubits":[1]}, or the shorthand
/// form `variant[:key=value,...]` (e.g. `ghz_pauli:i=3`,
/// `depolarize:p=0.3,qubits=[1,2]`). Throws ValidationError with a schema hint.
AttackModel parse_attack_spec(const std::string& spec);

/// Canonical JSON text for an attack model; round-trips through
/// parse_attack_spec.
std::string attack_to_json(const AttackModel& model);

/// Describes the accepted attack spec schema, for error messages.
std::string attack_schema_hint();

}  // namespace ghzsdc

#endif  // GHZSDC_ADVERSARY_H
