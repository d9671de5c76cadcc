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

#ifndef GHZSDC_SERIALIZE_H
#define GHZSDC_SERIALIZE_H

#include <string>
#include <vector>

#include "ghzsdc/analysis.h"
#include "ghzsdc/protocol.h"
#include "ghzsdc/state.h"
#include "json.hpp"

namespace ghzsdc {

/// {"n_qubits": n, "amplitudes": [[re, im], ...]}
nlohmann::json to_json(const PureState& psi);
PureState pure_state_from_json(const nlohmann::json& j);

/// {config, rounds: [{index, mode, basis?, outcomes, announcements, decodes?,
/// detected?}], decoded_message, aborted, abort_round}. Outcomes are +1/-1.
nlohmann::json to_json(const Transcript& t);

nlohmann::json to_json(const SecurityReport& r);

inline constexpr const char* kSweepCsvHeader = "attack_label,param,gamma,d_exact,d_mc,mc_std_err,s_max_bits";

/// Header line plus one line per row; missing Monte Carlo values are empty.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows);

/// Bits as a compact "0110" string.
std::string bits_to_string(const std::vector<int>& bits);
/// Parses a string of '0'/'1' characters. Throws ValidationError otherwise.
std::vector<int> bits_from_string(const std::string& s);

}  // namespace ghzsdc

#endif  // GHZSDC_SERIALIZE_H
