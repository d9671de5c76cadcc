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

#ifndef GHZSDC_TRANSCRIPT_H
#define GHZSDC_TRANSCRIPT_H

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ghzsdc/measurement.h"
#include "ghzsdc/state.h"

namespace ghzsdc {

/// Joint state of all parties after the channel. Attacks that keep the state
/// pure stay in the cheaper vector representation.
using JointState = std::variant<PureState, DensityOperator>;

unsigned n_qubits(const JointState& s);
OutcomeTable outcome_table(const JointState& s, Basis basis);
DensityOperator to_density(const JointState& s);

enum class Mode { kMessage, kControl };

std::string to_string(Mode m);

/// Party 0 is the sender; 1..n-1 are the receivers.
using PartyId = unsigned;

struct PublicMessage {
  enum class Kind { kReceipt, kModeAnnounce, kYesNo, kBasisAnnounce, kOutcomeAnnounce };

  PartyId sender;
  Kind kind;
  std::string payload;
};

std::string to_string(PublicMessage::Kind k);

/// What an intercepting eavesdropper learned in one round.
struct EveRecord {
  Basis basis;
  std::vector<unsigned> qubits;
  std::vector<int> outcomes;  // +/-1, aligned with `qubits`
};

struct Round {
  std::uint64_t index = 0;  // 1-based
  Mode mode = Mode::kMessage;
  std::shared_ptr<const PureState> pre_attack_state;
  std::shared_ptr<const JointState> post_attack_state;
  std::optional<Basis> basis;  // control rounds only
  std::vector<int> outcomes;   // every party, +/-1
  int alice_outcome = 1;
  std::vector<PublicMessage> announcements;
  std::optional<int> sent_bit;                   // message rounds only
  std::optional<std::vector<int>> receiver_decodes;  // message rounds only
  std::optional<bool> detection_flag;            // control rounds only
  std::optional<EveRecord> eve_record;
};

/// Sender's public answer in message mode: "yes" iff the bit matches her Bz
/// reading (bit 0 with outcome |0>, or bit 1 with outcome |1>).
bool sender_says_yes(int bit, int sender_outcome);

/// Receiver's decode from its own Bz outcome (+1 is |0>) and the public answer.
/// Under ideal GHZ correlation the receiver's value equals the sender's, so
/// the bit is 0 iff (yes and |0>) or (no and |1>).
int decode_bit(int receiver_outcome, bool yes);

/// Receipts from every receiver precede the first mode announcement.
bool receipts_precede_mode(const Round& round);

}  // namespace ghzsdc

#endif  // GHZSDC_TRANSCRIPT_H
