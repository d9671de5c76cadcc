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

#include "ghzsdc/protocol.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <thread>

#include "ghzsdc/errors.h"

namespace ghzsdc {

// ---------------------------------------------------------------------------
// Transcript helpers

unsigned n_qubits(const JointState& s) {
  return std::visit([](const auto& v) { return v.n_qubits(); }, s);
}

OutcomeTable outcome_table(const JointState& s, Basis basis) {
  if (const auto* psi = std::get_if<PureState>(&s)) {
    return outcome_table(*psi, basis);
  }
  return measure_all_density(std::get<DensityOperator>(s), basis);
}

DensityOperator to_density(const JointState& s) {
  if (const auto* psi = std::get_if<PureState>(&s)) {
    return DensityOperator::from_pure(*psi);
  }
  return std::get<DensityOperator>(s);
}

std::string to_string(Mode m) { return m == Mode::kMessage ? "message" : "control"; }

std::string to_string(PublicMessage::Kind k) {
  switch (k) {
    case PublicMessage::Kind::kReceipt:
      return "receipt";
    case PublicMessage::Kind::kModeAnnounce:
      return "mode";
    case PublicMessage::Kind::kYesNo:
      return "yes_no";
    case PublicMessage::Kind::kBasisAnnounce:
      return "basis";
    case PublicMessage::Kind::kOutcomeAnnounce:
      return "outcome";
  }
  return "unknown";
}

bool sender_says_yes(int bit, int sender_outcome) {
  const bool reads_zero = sender_outcome == 1;
  return (bit == 0 && reads_zero) || (bit == 1 && !reads_zero);
}

int decode_bit(int receiver_outcome, bool yes) {
  const bool reads_zero = receiver_outcome == 1;
  return ((yes && reads_zero) || (!yes && !reads_zero)) ? 0 : 1;
}

bool receipts_precede_mode(const Round& round) {
  std::size_t receipts = 0;
  bool mode_seen = false;
  for (const auto& msg : round.announcements) {
    if (msg.kind == PublicMessage::Kind::kReceipt) {
      if (mode_seen) {
        return false;
      }
      ++receipts;
    } else if (msg.kind == PublicMessage::Kind::kModeAnnounce) {
      mode_seen = true;
    } else if (!mode_seen) {
      return false;
    }
  }
  return mode_seen && receipts + 1 == round.outcomes.size();
}

// ---------------------------------------------------------------------------
// Rounds

namespace {

// Outcome tables of one joint state, computed on first use.
class TableCache {
 public:
  explicit TableCache(const JointState& state) : state_(state) {}

  const OutcomeTable& get(Basis b) {
    auto& slot = b == Basis::kZ ? z_ : x_;
    if (!slot) {
      slot = outcome_table(state_, b);
    }
    return *slot;
  }

 private:
  const JointState& state_;
  std::optional<OutcomeTable> z_;
  std::optional<OutcomeTable> x_;
};

std::string signed_outcome(int v) { return v > 0 ? "+1" : "-1"; }

void add_receipts(Round& round, unsigned n, Mode mode) {
  for (PartyId p = 1; p < n; ++p) {
    round.announcements.push_back({p, PublicMessage::Kind::kReceipt, "received"});
  }
  round.announcements.push_back({0, PublicMessage::Kind::kModeAnnounce, to_string(mode)});
}

Round message_round(TableCache& cache, unsigned n, int bit, Rng& rng) {
  if (bit != 0 && bit != 1) {
    throw ValidationError("message bits must be 0 or 1");
  }
  Round round;
  round.mode = Mode::kMessage;
  round.outcomes = outcomes_from_index(cache.get(Basis::kZ).sample(rng), n);
  round.alice_outcome = round.outcomes[0];
  round.sent_bit = bit;
  add_receipts(round, n, Mode::kMessage);
  const bool yes = sender_says_yes(bit, round.alice_outcome);
  round.announcements.push_back({0, PublicMessage::Kind::kYesNo, yes ? "yes" : "no"});
  std::vector<int> decodes;
  for (PartyId p = 1; p < n; ++p) {
    decodes.push_back(decode_bit(round.outcomes[p], yes));
  }
  round.receiver_decodes = std::move(decodes);
  return round;
}

Round control_round(TableCache& cache, unsigned n, Rng& rng) {
  Round round;
  round.mode = Mode::kControl;
  const Basis basis = rng.coin() ? Basis::kX : Basis::kZ;
  round.basis = basis;
  const std::uint64_t index = cache.get(basis).sample(rng);
  round.outcomes = outcomes_from_index(index, n);
  round.alice_outcome = round.outcomes[0];
  add_receipts(round, n, Mode::kControl);
  round.announcements.push_back({0, PublicMessage::Kind::kBasisAnnounce, to_string(basis)});
  for (PartyId p = 0; p < n; ++p) {
    round.announcements.push_back({p, PublicMessage::Kind::kOutcomeAnnounce, signed_outcome(round.outcomes[p])});
  }
  if (basis == Basis::kZ) {
    const bool all_equal =
        std::all_of(round.outcomes.begin(), round.outcomes.end(), [&](int v) { return v == round.outcomes[0]; });
    round.detection_flag = !all_equal;
  } else {
    round.detection_flag = outcome_product(index) == -1;
  }
  return round;
}

}  // namespace

Round run_message_round(const JointState& state, int bit, Rng& rng) {
  TableCache cache(state);
  return message_round(cache, n_qubits(state), bit, rng);
}

Round run_control_round(const JointState& state, Rng& rng) {
  TableCache cache(state);
  return control_round(cache, n_qubits(state), rng);
}

// ---------------------------------------------------------------------------
// Sessions

std::uint64_t default_round_cap(std::size_t message_length, double control_probability) {
  if (control_probability >= 1.0) {
    return 1000;
  }
  const double extra = std::ceil(20.0 * static_cast<double>(message_length) / (1.0 - control_probability));
  return 1000 + static_cast<std::uint64_t>(std::min(extra, 1e12));
}

void validate_config(const SessionConfig& config) {
  if (config.n_parties < kMinParties || config.n_parties > kMaxParties) {
    throw SizeError("n_parties must be in [" + std::to_string(kMinParties) + ", " + std::to_string(kMaxParties) +
                    "], got " + std::to_string(config.n_parties));
  }
  if (!(config.control_probability >= 0.0 && config.control_probability <= 1.0)) {
    throw ValidationError("control probability must lie in [0, 1]");
  }
  for (int b : config.message_bits) {
    if (b != 0 && b != 1) {
      throw ValidationError("message bits must be 0 or 1");
    }
  }
  validate_attack(config.attack, config.n_parties);
}

Transcript run_session(const SessionConfig& config) {
  validate_config(config);
  const unsigned n = config.n_parties;
  const std::uint64_t cap =
      config.max_rounds ? config.max_rounds : default_round_cap(config.message_bits.size(), config.control_probability);

  Transcript t;
  t.config = config;
  t.config.max_rounds = cap;
  t.decoded_message.resize(n - 1);

  auto ghz = std::make_shared<const PureState>(ghz_state(n));
  const bool stochastic = is_stochastic(config.attack);

  // Deterministic attacks give the same joint state every round.
  std::shared_ptr<const JointState> fixed_state;
  std::optional<TableCache> fixed_tables;
  if (!stochastic) {
    Rng unused(0);
    fixed_state = std::make_shared<const JointState>(sample_attack(config.attack, *ghz, unused).state);
    fixed_tables.emplace(*fixed_state);
  }

  std::size_t next_bit = 0;
  for (std::uint64_t r = 1; r <= cap && next_bit < config.message_bits.size(); ++r) {
    Rng rng = Rng::for_stream(config.seed, r);
    const bool control = rng.bernoulli(config.control_probability);

    std::shared_ptr<const JointState> state = fixed_state;
    std::optional<EveRecord> record;
    std::optional<TableCache> local_tables;
    if (stochastic) {
      AttackOutcome outcome = sample_attack(config.attack, *ghz, rng);
      state = std::make_shared<const JointState>(std::move(outcome.state));
      record = std::move(outcome.record);
      local_tables.emplace(*state);
    }
    TableCache& tables = stochastic ? *local_tables : *fixed_tables;

    Round round = control ? control_round(tables, n, rng) : message_round(tables, n, config.message_bits[next_bit], rng);
    round.index = r;
    round.pre_attack_state = ghz;
    round.post_attack_state = state;
    round.eve_record = std::move(record);

    if (control) {
      const bool detected = *round.detection_flag;
      t.rounds.push_back(std::move(round));
      if (detected) {
        t.aborted = true;
        t.abort_round = r;
        break;
      }
    } else {
      ++next_bit;
      for (PartyId p = 1; p < n; ++p) {
        t.decoded_message[p - 1].push_back((*round.receiver_decodes)[p - 1]);
      }
      t.eve_guesses.push_back(eve_inference(config.attack, round));
      t.rounds.push_back(std::move(round));
    }
  }
  t.untransmitted_bits = config.message_bits.size() - next_bit;
  return t;
}

std::uint64_t count_control_detections(const AttackModel& attack, unsigned n, std::uint64_t rounds,
                                       std::uint64_t seed, unsigned workers) {
  validate_attack(attack, n);
  const PureState ghz = ghz_state(n);
  const bool stochastic = is_stochastic(attack);
  std::optional<JointState> fixed_state;
  if (!stochastic) {
    Rng unused(0);
    fixed_state = sample_attack(attack, ghz, unused).state;
  }

  auto run_range = [&](std::uint64_t first, std::uint64_t last) {
    std::optional<TableCache> fixed_tables;
    if (fixed_state) {
      fixed_tables.emplace(*fixed_state);
    }
    std::uint64_t flagged = 0;
    for (std::uint64_t r = first; r <= last; ++r) {
      Rng rng = Rng::for_stream(seed, r);
      if (stochastic) {
        const JointState state = sample_attack(attack, ghz, rng).state;
        TableCache tables(state);
        flagged += *control_round(tables, n, rng).detection_flag ? 1 : 0;
      } else {
        flagged += *control_round(*fixed_tables, n, rng).detection_flag ? 1 : 0;
      }
    }
    return flagged;
  };

  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(rounds, 1))));
  if (workers == 1) {
    return rounds ? run_range(1, rounds) : 0;
  }
  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> threads;
    const std::uint64_t chunk = (rounds + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t first = 1 + w * chunk;
      const std::uint64_t last = std::min(rounds, first + chunk - 1);
      if (first > last) {
        continue;
      }
      threads.emplace_back([&, w, first, last] { partial[w] = run_range(first, last); });
    }
  }
  std::uint64_t total = 0;
  for (auto v : partial) {
    total += v;
  }
  return total;
}

}  // namespace ghzsdc
