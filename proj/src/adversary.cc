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

#include "ghzsdc/adversary.h"

#include <cmath>
#include <sstream>

#include "ghzsdc/channel.h"
#include "ghzsdc/errors.h"
#include "ghzsdc/measurement.h"

namespace ghzsdc {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string qubit_list(const std::vector<unsigned>& qubits) {
  std::string out = "[";
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    out += (i ? "," : "") + std::to_string(qubits[i]);
  }
  return out + "]";
}

void check_travel_qubits(const std::vector<unsigned>& qubits, unsigned n) {
  if (qubits.empty()) {
    throw ValidationError("attack must list at least one travel qubit");
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] == 0) {
      throw ValidationError("attack lists qubit 0: the sender's qubit never leaves her lab");
    }
    if (qubits[i] >= n) {
      throw ValidationError("attack lists qubit " + std::to_string(qubits[i]) + " but only qubits 1.." +
                            std::to_string(n - 1) + " travel");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) {
        throw ValidationError("attack lists qubit " + std::to_string(qubits[i]) + " twice");
      }
    }
  }
}

std::vector<CMatrix> projectors(Basis basis) {
  if (basis == Basis::kZ) {
    return {CMatrix(2, {1.0, 0.0, 0.0, 0.0}), CMatrix(2, {0.0, 0.0, 0.0, 1.0})};
  }
  return {CMatrix(2, {0.5, 0.5, 0.5, 0.5}), CMatrix(2, {0.5, -0.5, -0.5, 0.5})};
}

std::vector<CMatrix> depolarizing_kraus(double p) {
  const double a = std::sqrt(std::max(0.0, 1.0 - 0.75 * p));
  const double b = std::sqrt(0.25 * p);
  return {gates::I() * a, gates::X() * b, gates::Y() * b, gates::Z() * b};
}

PureState apply_recipe(const PauliRecipe& recipe, const PureState& psi) {
  PureState out = psi;
  for (unsigned q : recipe.x_qubits) {
    out = apply_gate(out, q, gates::X());
  }
  if (recipe.z_qubit) {
    out = apply_gate(out, *recipe.z_qubit, gates::Z());
  }
  return out;
}

DensityOperator per_qubit_channel(DensityOperator rho, const std::vector<CMatrix>& kraus,
                                  const std::vector<unsigned>& qubits) {
  for (unsigned q : qubits) {
    const unsigned target[1] = {q};
    rho = apply_channel(rho, kraus, target);
  }
  return rho;
}

}  // namespace

std::string variant_name(const AttackModel& model) {
  return std::visit(Overloaded{
                        [](const attack::NoAttack&) { return std::string("no_attack"); },
                        [](const attack::GhzPauli&) { return std::string("ghz_pauli"); },
                        [](const attack::InterceptResend&) { return std::string("intercept_resend"); },
                        [](const attack::Depolarize&) { return std::string("depolarize"); },
                        [](const attack::KrausCustom&) { return std::string("kraus"); },
                        [](const attack::WSubstitution&) { return std::string("w_substitution"); },
                    },
                    model);
}

std::string describe(const AttackModel& model) {
  return std::visit(
      Overloaded{
          [](const attack::NoAttack&) { return std::string("no_attack"); },
          [](const attack::GhzPauli& a) { return "ghz_pauli(i=" + std::to_string(a.index) + ")"; },
          [](const attack::InterceptResend& a) {
            return "intercept_resend(basis=" + to_string(a.basis) + ",qubits=" + qubit_list(a.qubits) + ")";
          },
          [](const attack::Depolarize& a) {
            std::ostringstream p;
            p << a.p;
            return "depolarize(p=" + p.str() + ",qubits=" + qubit_list(a.qubits) + ")";
          },
          [](const attack::KrausCustom& a) {
            return "kraus(ops=" + std::to_string(a.kraus_set.size()) + ",qubits=" + qubit_list(a.qubits) + ")";
          },
          [](const attack::WSubstitution&) { return std::string("w_substitution"); },
      },
      model);
}

bool is_stochastic(const AttackModel& model) { return std::holds_alternative<attack::InterceptResend>(model); }

PauliRecipe ghz_pauli_recipe(unsigned n, std::uint64_t index) {
  const GhzBasisElement e = ghz_basis_element(n, index);
  // Flip the member of the pair that leaves qubit 0 alone.
  const std::uint64_t flips = (e.x & 1U) ? e.x_complement : e.x;
  PauliRecipe recipe;
  for (unsigned q = 1; q < n; ++q) {
    if ((flips >> q) & 1U) {
      recipe.x_qubits.push_back(q);
    }
  }
  if (e.sign < 0) {
    recipe.z_qubit = 1;
  }
  return recipe;
}

void validate_attack(const AttackModel& model, unsigned n) {
  if (n < 2 || n > kMaxQubits) {
    throw SizeError("attack: qubit count " + std::to_string(n) + " unsupported");
  }
  std::visit(Overloaded{
                 [](const attack::NoAttack&) {},
                 [n](const attack::GhzPauli& a) {
                   if (a.index < 1 || a.index >= (std::uint64_t{1} << n)) {
                     throw ValidationError("ghz_pauli: index must be in 1.." + std::to_string((1U << n) - 1));
                   }
                   const PauliRecipe recipe = ghz_pauli_recipe(n, a.index);
                   const PureState reached = apply_recipe(recipe, ghz_state(n));
                   const double overlap = std::abs(inner_product(ghz_basis_state(n, a.index), reached));
                   if (std::abs(overlap - 1.0) > 1e-12) {
                     throw ValidationError("ghz_pauli: basis element not reachable with travel-qubit Paulis");
                   }
                 },
                 [n](const attack::InterceptResend& a) { check_travel_qubits(a.qubits, n); },
                 [n](const attack::Depolarize& a) {
                   if (!(a.p >= 0.0 && a.p <= 1.0)) {
                     throw ValidationError("depolarize: p must lie in [0, 1]");
                   }
                   check_travel_qubits(a.qubits, n);
                   if (n > kMaxDensityQubits) {
                     throw SizeError("depolarize: mixed-state attacks support at most " +
                                     std::to_string(kMaxDensityQubits) + " qubits");
                   }
                 },
                 [n](const attack::KrausCustom& a) {
                   check_travel_qubits(a.qubits, n);
                   validate_kraus_set(a.kraus_set, a.qubits.size());
                   if (n > kMaxDensityQubits) {
                     throw SizeError("kraus: mixed-state attacks support at most " +
                                     std::to_string(kMaxDensityQubits) + " qubits");
                   }
                 },
                 [](const attack::WSubstitution&) {},
             },
             model);
}

DensityOperator apply_attack(const AttackModel& model, const PureState& ideal) {
  const unsigned n = ideal.n_qubits();
  validate_attack(model, n);
  return std::visit(Overloaded{
                        [&](const attack::NoAttack&) { return DensityOperator::from_pure(ideal); },
                        [&](const attack::GhzPauli& a) {
                          return DensityOperator::from_pure(apply_recipe(ghz_pauli_recipe(n, a.index), ideal));
                        },
                        [&](const attack::InterceptResend& a) {
                          return per_qubit_channel(DensityOperator::from_pure(ideal), projectors(a.basis), a.qubits);
                        },
                        [&](const attack::Depolarize& a) {
                          return per_qubit_channel(DensityOperator::from_pure(ideal), depolarizing_kraus(a.p),
                                                   a.qubits);
                        },
                        [&](const attack::KrausCustom& a) {
                          return apply_channel(DensityOperator::from_pure(ideal), a.kraus_set, a.qubits);
                        },
                        [&](const attack::WSubstitution&) { return DensityOperator::from_pure(w_state(n)); },
                    },
                    model);
}

AttackOutcome sample_attack(const AttackModel& model, const PureState& ideal, Rng& rng) {
  const unsigned n = ideal.n_qubits();
  validate_attack(model, n);
  return std::visit(
      Overloaded{
          [&](const attack::NoAttack&) { return AttackOutcome{ideal, std::nullopt}; },
          [&](const attack::GhzPauli& a) {
            return AttackOutcome{apply_recipe(ghz_pauli_recipe(n, a.index), ideal), std::nullopt};
          },
          [&](const attack::InterceptResend& a) {
            const auto proj = projectors(a.basis);
            PureState psi = ideal;
            EveRecord record{a.basis, a.qubits, {}};
            for (unsigned q : a.qubits) {
              const unsigned target[1] = {q};
              const PureState branch0 = apply_matrix(psi, target, proj[0]);
              const double p0 = branch0.norm_squared();
              const bool read_zero = rng.uniform() < p0;
              if (read_zero) {
                psi = renormalized(n, {branch0.amplitudes().begin(), branch0.amplitudes().end()});
              } else {
                const PureState branch1 = apply_matrix(psi, target, proj[1]);
                psi = renormalized(n, {branch1.amplitudes().begin(), branch1.amplitudes().end()});
              }
              record.outcomes.push_back(read_zero ? 1 : -1);
            }
            return AttackOutcome{std::move(psi), std::move(record)};
          },
          [&](const attack::Depolarize&) { return AttackOutcome{apply_attack(model, ideal), std::nullopt}; },
          [&](const attack::KrausCustom&) { return AttackOutcome{apply_attack(model, ideal), std::nullopt}; },
          [&](const attack::WSubstitution&) { return AttackOutcome{w_state(n), std::nullopt}; },
      },
      model);
}

std::optional<int> eve_inference(const AttackModel& model, const Round& round) {
  const auto* ir = std::get_if<attack::InterceptResend>(&model);
  if (ir == nullptr || ir->basis != Basis::kZ || round.mode != Mode::kMessage || !round.eve_record ||
      round.eve_record->outcomes.empty()) {
    return std::nullopt;
  }
  for (const auto& msg : round.announcements) {
    if (msg.kind == PublicMessage::Kind::kYesNo) {
      return decode_bit(round.eve_record->outcomes.front(), msg.payload == "yes");
    }
  }
  return std::nullopt;
}

}  // namespace ghzsdc
