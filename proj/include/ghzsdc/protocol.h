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

#ifndef GHZSDC_PROTOCOL_H
#define GHZSDC_PROTOCOL_H

#include <cstdint>
#include <optional>
#include <vector>

#include "ghzsdc/adversary.h"
#include "ghzsdc/rng.h"
#include "ghzsdc/transcript.h"

namespace ghzsdc {

inline constexpr unsigned kMinParties = 3;
inline constexpr unsigned kMaxParties = 16;
inline constexpr double kDefaultControlProbability = 0.25;

struct SessionConfig {
  unsigned n_parties = 3;
  double control_probability = kDefaultControlProbability;
  std::vector<int> message_bits;
  std::uint64_t seed = 0;
  AttackModel attack = attack::NoAttack{};
  /// Hard stop on the number of rounds; 0 picks default_round_cap().
  std::uint64_t max_rounds = 0;
};

/// Generous cap so that a session with c < 1 finishes its message with
/// overwhelming probability: 1000 + ceil(20 L / (1 - c)), or 1000 when c = 1.
std::uint64_t default_round_cap(std::size_t message_length, double control_probability);

/// Throws ValidationError/SizeError for out-of-range parameters.
void validate_config(const SessionConfig& config);

struct Transcript {
  SessionConfig config;
  std::vector<Round> rounds;
  /// decoded_message[r] holds receiver r+1's bits, one per message round.
  std::vector<std::vector<int>> decoded_message;
  bool aborted = false;
  std::optional<std::uint64_t> abort_round;
  /// Message bits that were never sent (abort or round cap).
  std::size_t untransmitted_bits = 0;
  /// Eve's guesses, one per message round, when she keeps a Bz record.
  std::vector<std::optional<int>> eve_guesses;

  bool completed() const { return !aborted && untransmitted_bits == 0; }
};

/// Message mode: every party measures Bz; the sender publicly answers yes/no
/// for `bit` and each receiver decodes.
Round run_message_round(const JointState& state, int bit, Rng& rng);

/// Control mode: a uniformly random basis is measured by all parties and the
/// outcomes are announced. Flags if Bz readings disagree or the Bx product is -1.
Round run_control_round(const JointState& state, Rng& rng);

/// Runs rounds until the message is sent, a control round flags, or the round
/// cap is reached. Round r draws from Rng::for_stream(seed, r), in the order:
/// mode coin, attack sample, basis coin (control only), measurement.
Transcript run_session(const SessionConfig& config);

/// Runs `rounds` control rounds under `attack` and counts detections. Round r
/// uses Rng::for_stream(seed, r), so the count is independent of `workers`.
std::uint64_t count_control_detections(const AttackModel& attack, unsigned n, std::uint64_t rounds,
                                       std::uint64_t seed, unsigned workers = 1);

}  // namespace ghzsdc

#endif  // GHZSDC_PROTOCOL_H
